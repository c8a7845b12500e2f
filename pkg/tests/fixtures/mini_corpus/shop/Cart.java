package shop;

public class Cart {
    private int total;

    public int total() {
        return total;
    }

    public void clear() {
        total = 0;
    }
}
