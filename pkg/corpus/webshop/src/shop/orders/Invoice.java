package shop.orders;

public class Invoice {
    private long gain;
    private int floor;

    public long getGain() {
        return gain;
    }

    public int getFloor() {
        return floor;
    }

    private long totalX;
    public long getTotal() {
        return totalX;
    }
    private int countX;
    public int getCount() {
        return countX;
    }
}
