package shop.reports;

public class Export {
    private long margin;
    private double gain;
    private int offset;
    private long floor;

    public long getMargin() {
        return margin;
    }

    public double getGain() {
        return gain;
    }

    public int getOffset() {
        return offset;
    }

    public void setOffset(int value) {
        this.offset = value;
    }

    public long getFloor() {
        return floor;
    }

    public void setFloor(long value) {
        this.floor = value;
    }
}
