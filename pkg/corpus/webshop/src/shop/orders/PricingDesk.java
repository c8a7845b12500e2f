package shop.orders;

public class PricingDesk {
    private Invoice invoice;
    private int price;
    private int count;
    private int amount;
    private int delta;
    private int factor;
    private int amountHint;
    private int span;
    private int priceLimit;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + price;
        acc = acc + count;
        acc = acc + amount;
        acc = acc + delta;
        acc = acc + factor;
        acc = acc + amountHint;
        acc = acc + span;
        acc = acc + priceLimit;
        acc = acc + (int) invoice.getTotal();
        return acc;
    }

    public int quiet(int seed) {
        return seed + price;
    }
}
