package shop.shipping;

public class Addr {
    private long count;
    private int span;
    private int countLimit;
    private int score;

    public long getCount() {
        return count;
    }

    public int getSpan() {
        return span;
    }

    public int getCountLimit() {
        return countLimit;
    }

    public void setCountLimit(int value) {
        this.countLimit = value;
    }

    public int getScore() {
        return score;
    }
}
