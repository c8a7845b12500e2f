package shop;

public class Child extends Parent {
    private int id;
    private int extra;

    public String toString() {
        return "child";
    }

    public int extraValue() {
        return extra + 1;
    }
}
