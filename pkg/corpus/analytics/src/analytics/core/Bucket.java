package analytics.core;

public class Bucket {
    private long tax;
    private double total;

    public long getTax() {
        return tax;
    }

    public void setTax(long value) {
        this.tax = value;
    }

    public double getTotal() {
        return total;
    }
}
