package shop.billing;

public class Discount {
    private int rank;
    private double rate;
    private double gain;
    private double level;

    public int getRank() {
        return rank;
    }

    public void setRank(int value) {
        this.rank = value;
    }

    public double getRate() {
        return rate;
    }

    public void setRate(double value) {
        this.rate = value;
    }

    public double getGain() {
        return gain;
    }

    public void setGain(double value) {
        this.gain = value;
    }

    public double getLevel() {
        return level;
    }

    public void setLevel(double value) {
        this.level = value;
    }
}
