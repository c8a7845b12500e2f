package shop.catalog;

public class Variant {
    private long offset;
    private long quota;
    private long weight;
    private long delta;

    public long getOffset() {
        return offset;
    }

    public void setOffset(long value) {
        this.offset = value;
    }

    public long getQuota() {
        return quota;
    }

    public void setQuota(long value) {
        this.quota = value;
    }

    public long getWeight() {
        return weight;
    }

    public long getDelta() {
        return delta;
    }
}
