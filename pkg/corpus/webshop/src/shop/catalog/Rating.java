package shop.catalog;

public class Rating {
    private double level;
    private double balance;

    public double getLevel() {
        return level;
    }

    public double getBalance() {
        return balance;
    }

    public void setBalance(double value) {
        this.balance = value;
    }
}
