package shop.shipping;

public class Carrier {
    private int offset;
    private int cost;

    public int getOffset() {
        return offset;
    }

    public void setOffset(int value) {
        this.offset = value;
    }

    public int getCost() {
        return cost;
    }
}
