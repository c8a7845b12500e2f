package shop.orders;

public class Basket {
    private double budget;
    private double weight;
    private long delta;

    public double getBudget() {
        return budget;
    }

    public double getWeight() {
        return weight;
    }

    public long getDelta() {
        return delta;
    }
}
