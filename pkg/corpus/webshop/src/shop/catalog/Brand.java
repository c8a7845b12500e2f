package shop.catalog;

public class Brand {
    private double height;
    private double margin;

    public double getHeight() {
        return height;
    }

    public double getMargin() {
        return margin;
    }
}
