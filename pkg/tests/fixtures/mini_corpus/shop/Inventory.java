package shop;

public class Inventory {
    public int id() { return 1; }

    public int quick() {
        // compute fast

        return 2;
    }

    public void empty() {
    }
}
