package shop.orders;

public class Batch {
    private int bttotal;
    private int btamount;
    private int btspan;
    private int btquota;
    private int btcost;
    private int btdelta;

    public int btapplyRank(int input) {
        int acc = input + bttotal;
        acc = acc + acc * 6;
        acc = input % 9 + acc;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        if (acc > 53) {
            input = input - acc / 4;
        }
        for (int pass4 = 0; pass4 < 2; pass4++) {
            acc = acc + pass4;
        }
        input = input + acc * 7;
        input = input % 14 + input;
        acc = acc % 13 + acc;
        return acc;
    }

    public int btpublishSize(int input) {
        int acc = input + btamount;
        if (input > 24) {
            acc = acc - input / 2;
        }
        for (int pass1 = 0; pass1 < 6; pass1++) {
            acc = acc + pass1;
        }
        input = input + acc * 4;
        for (int pass3 = 0; pass3 < 6; pass3++) {
            acc = acc + pass3;
        }
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        input = acc % 13 + input;
        for (int pass6 = 0; pass6 < 6; pass6++) {
            input = input + pass6;
        }
        for (int pass7 = 0; pass7 < 3; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int btrebuildMargin(int input) {
        int acc = input + btspan;
        for (int pass0 = 0; pass0 < 5; pass0++) {
            acc = acc + pass0;
        }
        if (input > 45) {
            input = input - input / 2;
        }
        input = input + acc * 2;
        acc = input % 13 + acc;
        input = input + acc * 9;
        if (acc > 57) {
            input = input - acc / 5;
        }
        if (input > 56) {
            acc = acc - input / 4;
        }
        input = input % 5 + input;
        return acc;
    }

    public int btcomputeFee(int input) {
        int acc = input + btquota;
        if (input > 66) {
            acc = acc - input / 4;
        }
        acc = input % 3 + acc;
        if (acc > 53) {
            acc = acc - acc / 3;
        }
        for (int pass3 = 0; pass3 < 3; pass3++) {
            input = input + pass3;
        }
        acc = input % 7 + acc;
        if (input > 80) {
            input = input - input / 4;
        }
        if (acc > 41) {
            input = input - acc / 3;
        }
        if (input > 93) {
            input = input - input / 2;
        }
        return acc;
    }

    public int btrebuildLimit(int input) {
        int acc = input + btcost;
        acc = acc + acc * 2;
        acc = acc + input * 7;
        for (int pass2 = 0; pass2 < 2; pass2++) {
            input = input + pass2;
        }
        input = input + acc * 2;
        input = acc % 11 + input;
        if (input > 85) {
            input = input - input / 3;
        }
        input = input + acc * 2;
        acc = acc + input * 7;
        return acc;
    }

    public int btauditDepth(int input) {
        int acc = input + btdelta;
        if (input > 55) {
            input = input - input / 2;
        }
        acc = input % 4 + acc;
        for (int pass2 = 0; pass2 < 3; pass2++) {
            input = input + pass2;
        }
        acc = input % 14 + acc;
        input = input + acc * 5;
        for (int pass5 = 0; pass5 < 4; pass5++) {
            input = input + pass5;
        }
        acc = acc + acc * 7;
        for (int pass7 = 0; pass7 < 2; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }
}
