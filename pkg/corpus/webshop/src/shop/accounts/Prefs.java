package shop.accounts;

public class Prefs {
    private double volume;
    private long width;

    public double getVolume() {
        return volume;
    }

    public long getWidth() {
        return width;
    }

    public void setWidth(long value) {
        this.width = value;
    }
}
