package shop.orders;

public class Voucher {
    private int span;
    private long gain;
    private long price;

    public int getSpan() {
        return span;
    }

    public void setSpan(int value) {
        this.span = value;
    }

    public long getGain() {
        return gain;
    }

    public long getPrice() {
        return price;
    }

    public void setPrice(long value) {
        this.price = value;
    }
}
