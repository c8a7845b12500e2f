package shop.reports;

public class Figure {
    private int weight;
    private long amount;
    private int margin;

    public int getWeight() {
        return weight;
    }

    public long getAmount() {
        return amount;
    }

    public int getMargin() {
        return margin;
    }

    public void setMargin(int value) {
        this.margin = value;
    }

    private int widthX;
    public int getWidth() {
        return widthX;
    }
    private int heightX;
    public int getHeight() {
        return heightX;
    }
}
