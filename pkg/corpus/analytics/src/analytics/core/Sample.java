package analytics.core;

public class Sample {
    private long rate;
    private long depth;
    private double delta;

    public long getRate() {
        return rate;
    }

    public long getDepth() {
        return depth;
    }

    public void setDepth(long value) {
        this.depth = value;
    }

    public double getDelta() {
        return delta;
    }
}
