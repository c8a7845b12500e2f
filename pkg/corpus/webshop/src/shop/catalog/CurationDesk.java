package shop.catalog;

public class CurationDesk {
    private Review review;
    private int cap;
    private int depth;
    private int index;
    private int volume;
    private int weight;
    private int total;
    private int capLimit;
    private int budget;
    private int price;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + cap;
        acc = acc + depth;
        acc = acc + index;
        acc = acc + volume;
        acc = acc + weight;
        acc = acc + total;
        acc = acc + capLimit;
        acc = acc + budget;
        acc = acc + price;
        acc = acc + (int) review.getScore();
        return acc;
    }

    public int quiet(int seed) {
        return seed + cap;
    }
}
