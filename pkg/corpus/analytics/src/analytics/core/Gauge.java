package analytics.core;

public class Gauge {
    private long fee;
    private long cap;

    public long getFee() {
        return fee;
    }

    public void setFee(long value) {
        this.fee = value;
    }

    public long getCap() {
        return cap;
    }
}
