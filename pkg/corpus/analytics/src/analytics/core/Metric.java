package analytics.core;

public class Metric {
    private long total;
    private long rate;
    private int price;

    public long getTotal() {
        return total;
    }

    public long getRate() {
        return rate;
    }

    public int getPrice() {
        return price;
    }

    public void setPrice(int value) {
        this.price = value;
    }
}
