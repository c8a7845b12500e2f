package shop;

public class Campaign {
    private int rate;

    public int getRate() {
        return rate;
    }
}
