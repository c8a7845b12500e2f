package shop.billing;

public class RoundingDesk {
    private Money money;
    private int delta;
    private int volume;
    private int weight;
    private int count;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + delta;
        acc = acc + volume;
        acc = acc + weight;
        acc = acc + count;
        acc = acc + (int) money.getAmount();
        return acc;
    }

    public int quiet(int seed) {
        return seed + delta;
    }
}
