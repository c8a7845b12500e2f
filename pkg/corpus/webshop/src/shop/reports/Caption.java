package shop.reports;

public class Caption {
    private double delta;
    private long volume;
    private long height;
    private double span;

    public double getDelta() {
        return delta;
    }

    public long getVolume() {
        return volume;
    }

    public void setVolume(long value) {
        this.volume = value;
    }

    public long getHeight() {
        return height;
    }

    public void setHeight(long value) {
        this.height = value;
    }

    public double getSpan() {
        return span;
    }
}
