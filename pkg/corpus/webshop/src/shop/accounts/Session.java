package shop.accounts;

public class Session {
    private double limit;
    private int price;
    private int priceLimit;
    private double width;

    public double getLimit() {
        return limit;
    }

    public int getPrice() {
        return price;
    }

    public void setPrice(int value) {
        this.price = value;
    }

    public int getPriceLimit() {
        return priceLimit;
    }

    public double getWidth() {
        return width;
    }

    public void setWidth(double value) {
        this.width = value;
    }
}
