package analytics.core;

public class Window {
    private long factor;
    private long weight;
    private double span;

    public long getFactor() {
        return factor;
    }

    public void setFactor(long value) {
        this.factor = value;
    }

    public long getWeight() {
        return weight;
    }

    public double getSpan() {
        return span;
    }
}
