package shop;

public class Loop {
    public int ping(int n) {
        if (n <= 0) {
            return 0;
        }
        return pong(n - 1);
    }

    public int pong(int n) {
        return ping(n - 1);
    }

    public int self(int n) {
        return self(n - 1);
    }
}
