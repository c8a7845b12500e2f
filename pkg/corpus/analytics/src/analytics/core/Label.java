package analytics.core;

public class Label {
    private int rank;
    private long offset;

    public int getRank() {
        return rank;
    }

    public long getOffset() {
        return offset;
    }

    public void setOffset(long value) {
        this.offset = value;
    }
}
