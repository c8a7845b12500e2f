package shop.accounts;

public class Device {
    private double count;
    private long bonus;

    public double getCount() {
        return count;
    }

    public long getBonus() {
        return bonus;
    }
}
