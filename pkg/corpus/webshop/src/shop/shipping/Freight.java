package shop.shipping;

public class Freight {
    private Manifest manifest;
    private int frtbalance;
    private int frtcount;

    public int frtcomputeCost(int input) {
        int acc = input + frtbalance;
        if (input > 41) {
            acc = acc - input / 4;
        }
        input = input + input * 4;
        input = input + acc * 5;
        if (acc > 27) {
            acc = acc - acc / 4;
        }
        acc = input % 16 + acc;
        return acc;
    }

    public int frtcollectTotal(int input) {
        int acc = input + frtcount;
        input = input + input * 9;
        if (input > 81) {
            acc = acc - input / 4;
        }
        if (input > 85) {
            acc = acc - input / 5;
        }
        acc = acc + acc * 4;
        acc = acc + input * 3;
        return acc;
    }

    public int frtmergeWeight(int input) {
        int acc = input + frtbalance;
        for (int pass0 = 0; pass0 < 5; pass0++) {
            acc = acc + pass0;
        }
        input = input % 11 + input;
        input = input % 3 + input;
        input = input % 11 + input;
        input = acc % 9 + input;
        return acc;
    }
}
