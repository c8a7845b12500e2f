package shop.billing;

public class TaxBand {
    private int height;
    private int fee;

    public int getHeight() {
        return height;
    }

    public int getFee() {
        return fee;
    }

    public void setFee(int value) {
        this.fee = value;
    }
}
