package shop;

public class Parent {
    protected int id;
    protected String tag;

    public String toString() {
        return tag;
    }
}
