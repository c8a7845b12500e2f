package shop.billing;

public class Period {
    private long delta;
    private int total;
    private double rank;
    private long offset;

    public long getDelta() {
        return delta;
    }

    public void setDelta(long value) {
        this.delta = value;
    }

    public int getTotal() {
        return total;
    }

    public void setTotal(int value) {
        this.total = value;
    }

    public double getRank() {
        return rank;
    }

    public void setRank(double value) {
        this.rank = value;
    }

    public long getOffset() {
        return offset;
    }
}
