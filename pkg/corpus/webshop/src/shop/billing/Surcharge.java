package shop.billing;

public class Surcharge {
    private long rate;
    private int volume;
    private double width;
    private double fee;

    public long getRate() {
        return rate;
    }

    public int getVolume() {
        return volume;
    }

    public double getWidth() {
        return width;
    }

    public double getFee() {
        return fee;
    }
}
