package shop.shipping;

public class LabelDesk {
    private Parcel parcel;
    private int cap;
    private int tax;
    private int span;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + cap;
        acc = acc + tax;
        acc = acc + span;
        acc = acc + (int) parcel.getWeight();
        return acc;
    }

    public int quiet(int seed) {
        return seed + cap;
    }
}
