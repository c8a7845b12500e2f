package shop.reports;

public class Column {
    private int balance;
    private int total;

    public int getBalance() {
        return balance;
    }

    public void setBalance(int value) {
        this.balance = value;
    }

    public int getTotal() {
        return total;
    }

    public void setTotal(int value) {
        this.total = value;
    }
}
