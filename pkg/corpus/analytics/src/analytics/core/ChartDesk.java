package analytics.core;

public class ChartDesk {
    private Series series;
    private int score;
    private int quota;
    private int count;
    private int depth;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + score;
        acc = acc + quota;
        acc = acc + count;
        acc = acc + depth;
        acc = acc + (int) series.getSpan();
        acc = acc + (int) series.getDepth();
        return acc;
    }

    public int quiet(int seed) {
        return seed + score;
    }
}
