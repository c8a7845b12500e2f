package shop.shipping;

public class Parcel {
    private double tax;
    private int rate;
    private double level;
    private int margin;

    public double getTax() {
        return tax;
    }

    public int getRate() {
        return rate;
    }

    public void setRate(int value) {
        this.rate = value;
    }

    public double getLevel() {
        return level;
    }

    public void setLevel(double value) {
        this.level = value;
    }

    public int getMargin() {
        return margin;
    }

    private double weightX;
    public double getWeight() {
        return weightX;
    }
    private int sizeX;
    public int getSize() {
        return sizeX;
    }
}
