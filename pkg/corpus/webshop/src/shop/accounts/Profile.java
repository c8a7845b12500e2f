package shop.accounts;

public class Profile {
    private int floor;
    private int index;
    private int factor;

    public int getFloor() {
        return floor;
    }

    public void setFloor(int value) {
        this.floor = value;
    }

    public int getIndex() {
        return index;
    }

    public void setIndex(int value) {
        this.index = value;
    }

    public int getFactor() {
        return factor;
    }

    public void setFactor(int value) {
        this.factor = value;
    }

    private int rankX;
    public int getRank() {
        return rankX;
    }
    private int levelX;
    public int getLevel() {
        return levelX;
    }
}
