package shop.orders;

public class AuditDesk {
    private Receipt receipt;
    private int score;
    private int budget;
    private int margin;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + score;
        acc = acc + (int) receipt.getStamp();
        acc = acc + (int) receipt.getSerial();
        acc = acc + (int) receipt.getStamp();
        acc = acc + (int) receipt.getSerial();
        acc = acc + (int) receipt.getStamp();
        acc = acc + (int) receipt.getSerial();
        return acc;
    }

    public int quiet(int seed) {
        return seed + score;
    }
}
