package shop.catalog;

public class Shelf {
    private long fee;
    private double score;
    private int total;
    private double amount;

    public long getFee() {
        return fee;
    }

    public void setFee(long value) {
        this.fee = value;
    }

    public double getScore() {
        return score;
    }

    public int getTotal() {
        return total;
    }

    public void setTotal(int value) {
        this.total = value;
    }

    public double getAmount() {
        return amount;
    }
}
