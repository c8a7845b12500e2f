package shop.billing;

public class Tariff {
    private long level;
    private long cost;
    private int levelCache;
    private long total;

    public long getLevel() {
        return level;
    }

    public long getCost() {
        return cost;
    }

    public void setCost(long value) {
        this.cost = value;
    }

    public int getLevelCache() {
        return levelCache;
    }

    public void setLevelCache(int value) {
        this.levelCache = value;
    }

    public long getTotal() {
        return total;
    }
}
