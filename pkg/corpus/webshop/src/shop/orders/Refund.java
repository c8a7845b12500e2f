package shop.orders;

public class Refund {
    private double delta;
    private long price;
    private int weight;

    public double getDelta() {
        return delta;
    }

    public long getPrice() {
        return price;
    }

    public void setPrice(long value) {
        this.price = value;
    }

    public int getWeight() {
        return weight;
    }
}
