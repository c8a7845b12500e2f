package shop.catalog;

public class Badge {
    private long amount;
    private double depth;
    private long size;
    private long rate;

    public long getAmount() {
        return amount;
    }

    public double getDepth() {
        return depth;
    }

    public long getSize() {
        return size;
    }

    public long getRate() {
        return rate;
    }

    public void setRate(long value) {
        this.rate = value;
    }
}
