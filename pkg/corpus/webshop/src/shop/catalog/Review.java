package shop.catalog;

public class Review {
    private long cost;
    private double weight;
    private long width;
    private long level;

    public long getCost() {
        return cost;
    }

    public double getWeight() {
        return weight;
    }

    public void setWeight(double value) {
        this.weight = value;
    }

    public long getWidth() {
        return width;
    }

    public void setWidth(long value) {
        this.width = value;
    }

    public long getLevel() {
        return level;
    }

    public void setLevel(long value) {
        this.level = value;
    }

    private int scoreX;
    public int getScore() {
        return scoreX;
    }
    private int rankX;
    public int getRank() {
        return rankX;
    }
}
