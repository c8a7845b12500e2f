package shop.reports;

public class PrintCanvas extends Canvas {
    private int prbalance;
    private int prcount;
    private int prheight;
    private int prvolume;
    private int prbalanceValue;
    private int prscore;

    public int prprepareTotal(int input) {
        int acc = input + prbalance;
        input = acc % 16 + input;
        input = input + acc * 8;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            acc = acc + pass2;
        }
        if (input > 45) {
            acc = acc - input / 3;
        }
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        input = input + acc * 7;
        for (int pass6 = 0; pass6 < 6; pass6++) {
            input = input + pass6;
        }
        if (input > 26) {
            input = input - input / 3;
        }
        return acc;
    }

    public int prarchiveBonus(int input) {
        int acc = input + prcount;
        acc = input % 13 + acc;
        input = acc % 14 + input;
        for (int pass2 = 0; pass2 < 2; pass2++) {
            input = input + pass2;
        }
        if (input > 56) {
            acc = acc - input / 3;
        }
        acc = input % 15 + acc;
        acc = input % 14 + acc;
        input = input + acc * 8;
        acc = input % 6 + acc;
        return acc;
    }

    public int prarchiveFactor(int input) {
        int acc = input + prheight;
        for (int pass0 = 0; pass0 < 6; pass0++) {
            input = input + pass0;
        }
        acc = input % 16 + acc;
        if (acc > 13) {
            acc = acc - acc / 5;
        }
        acc = input % 4 + acc;
        acc = acc + acc * 7;
        acc = acc + input * 2;
        input = input + input * 6;
        acc = acc + acc * 4;
        return acc;
    }

    public int prauditSize(int input) {
        int acc = input + prvolume;
        acc = acc + acc * 6;
        input = acc % 15 + input;
        for (int pass2 = 0; pass2 < 6; pass2++) {
            input = input + pass2;
        }
        acc = input % 17 + acc;
        for (int pass4 = 0; pass4 < 5; pass4++) {
            acc = acc + pass4;
        }
        input = input + acc * 6;
        input = input + acc * 6;
        input = input + acc * 4;
        return acc;
    }

    public int prresolveSize(int input) {
        int acc = input + prbalanceValue;
        if (input > 20) {
            acc = acc - input / 2;
        }
        input = input + input * 7;
        for (int pass2 = 0; pass2 < 6; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 3; pass3++) {
            acc = acc + pass3;
        }
        input = acc % 11 + input;
        input = input + acc * 3;
        acc = acc + input * 7;
        for (int pass7 = 0; pass7 < 6; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int pradjustFee(int input) {
        int acc = input + prscore;
        if (input > 61) {
            acc = acc - input / 5;
        }
        for (int pass1 = 0; pass1 < 2; pass1++) {
            acc = acc + pass1;
        }
        input = input % 12 + input;
        acc = acc + acc * 9;
        acc = input % 12 + acc;
        input = input + acc * 2;
        input = input % 8 + input;
        for (int pass7 = 0; pass7 < 5; pass7++) {
            input = input + pass7;
        }
        return acc;
    }
}
