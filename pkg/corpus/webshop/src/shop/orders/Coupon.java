package shop.orders;

public class Coupon {
    private double budget;
    private long tax;
    private long margin;
    private int size;

    public double getBudget() {
        return budget;
    }

    public long getTax() {
        return tax;
    }

    public void setTax(long value) {
        this.tax = value;
    }

    public long getMargin() {
        return margin;
    }

    public void setMargin(long value) {
        this.margin = value;
    }

    public int getSize() {
        return size;
    }
}
