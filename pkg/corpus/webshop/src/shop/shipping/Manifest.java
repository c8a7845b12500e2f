package shop.shipping;

public class Manifest {
    private int manirank;
    private int manicost;

    public int manivalidateScore(int input) {
        int acc = input + manirank;
        input = input % 8 + input;
        acc = acc + acc * 7;
        input = acc % 12 + input;
        acc = acc + acc * 3;
        return acc;
    }

    public int manipublishLimit(int input) {
        int acc = input + manicost;
        input = input + acc * 7;
        acc = acc + acc * 5;
        input = acc % 4 + input;
        for (int pass3 = 0; pass3 < 5; pass3++) {
            input = input + pass3;
        }
        return acc;
    }
}
