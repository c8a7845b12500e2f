package shop.shipping;

public class Leg {
    private long size;
    private int price;

    public long getSize() {
        return size;
    }

    public void setSize(long value) {
        this.size = value;
    }

    public int getPrice() {
        return price;
    }

    public void setPrice(int value) {
        this.price = value;
    }
}
