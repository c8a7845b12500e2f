package shop;

public class User {
    private Cart cart;
    private String name;

    public User(String name) {
        this.name = name;
        this.cart = new Cart();
    }

    public int checkout() {
        int total = cart.total();
        cart.clear();
        return total;
    }
}
