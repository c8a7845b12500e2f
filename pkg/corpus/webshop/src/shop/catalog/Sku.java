package shop.catalog;

public class Sku {
    private long level;
    private double span;

    public long getLevel() {
        return level;
    }

    public double getSpan() {
        return span;
    }

    public void setSpan(double value) {
        this.span = value;
    }
}
