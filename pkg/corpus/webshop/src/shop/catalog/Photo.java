package shop.catalog;

public class Photo {
    private long price;
    private long margin;
    private int cost;
    private double depth;

    public long getPrice() {
        return price;
    }

    public void setPrice(long value) {
        this.price = value;
    }

    public long getMargin() {
        return margin;
    }

    public void setMargin(long value) {
        this.margin = value;
    }

    public int getCost() {
        return cost;
    }

    public double getDepth() {
        return depth;
    }
}
