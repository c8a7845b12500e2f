package shop.shipping;

public class Customs {
    private long score;
    private int volume;
    private double rank;

    public long getScore() {
        return score;
    }

    public void setScore(long value) {
        this.score = value;
    }

    public int getVolume() {
        return volume;
    }

    public double getRank() {
        return rank;
    }
}
