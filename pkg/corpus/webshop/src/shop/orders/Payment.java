package shop.orders;

public class Payment {
    private long depth;
    private double delta;
    private int cap;

    public long getDepth() {
        return depth;
    }

    public void setDepth(long value) {
        this.depth = value;
    }

    public double getDelta() {
        return delta;
    }

    public void setDelta(double value) {
        this.delta = value;
    }

    public int getCap() {
        return cap;
    }
}
