package shop.orders;

public class Receipt {
    private double rank;
    private double delta;
    private double weight;

    public double getRank() {
        return rank;
    }

    public double getDelta() {
        return delta;
    }

    public double getWeight() {
        return weight;
    }

    public void setWeight(double value) {
        this.weight = value;
    }

    private long stampX;
    public long getStamp() {
        return stampX;
    }
    private int serialX;
    public int getSerial() {
        return serialX;
    }
}
