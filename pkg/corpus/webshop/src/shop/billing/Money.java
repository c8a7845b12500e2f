package shop.billing;

public class Money {
    private int amount;
    private int score;
    private double depth;

    public int getAmount() {
        return amount;
    }

    public int getScore() {
        return score;
    }

    public void setScore(int value) {
        this.score = value;
    }

    public double getDepth() {
        return depth;
    }

    private int scaleX;
    public int getScale() {
        return scaleX;
    }
}
