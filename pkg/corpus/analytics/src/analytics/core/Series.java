package analytics.core;

public class Series {
    private double rate;
    private double level;
    private int delta;
    private int rateValue;

    public double getRate() {
        return rate;
    }

    public void setRate(double value) {
        this.rate = value;
    }

    public double getLevel() {
        return level;
    }

    public void setLevel(double value) {
        this.level = value;
    }

    public int getDelta() {
        return delta;
    }

    public int getRateValue() {
        return rateValue;
    }

    public void setRateValue(int value) {
        this.rateValue = value;
    }

    private int spanX;
    public int getSpan() {
        return spanX;
    }
    private int depthX;
    public int getDepth() {
        return depthX;
    }
}
