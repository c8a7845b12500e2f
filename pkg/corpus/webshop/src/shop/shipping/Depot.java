package shop.shipping;

public class Depot {
    private int span;
    private double quota;

    public int getSpan() {
        return span;
    }

    public double getQuota() {
        return quota;
    }
}
