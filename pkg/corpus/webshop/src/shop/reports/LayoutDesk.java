package shop.reports;

public class LayoutDesk {
    private Figure figure;
    private int total;
    private int rate;
    private int volume;
    private int width;
    private int bonus;
    private int rateMark;
    private int cost;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + total;
        acc = acc + rate;
        acc = acc + volume;
        acc = acc + width;
        acc = acc + bonus;
        acc = acc + rateMark;
        acc = acc + cost;
        acc = acc + (int) figure.getWidth();
        acc = acc + (int) figure.getHeight();
        return acc;
    }

    public int quiet(int seed) {
        return seed + total;
    }
}
