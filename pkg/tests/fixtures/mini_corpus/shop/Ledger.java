package shop;

public class Ledger {
    private int debits;
    private int credits;
    private int balance;
    private int currency;
    private int precision;

    public int net() {
        return credits - debits;
    }
}
