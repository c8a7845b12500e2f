package shop.catalog;

public class Listing {
    private int basemargin;
    private int baseoffset;
    private int baselevel;
    private int baserank;
    private int basetotal;
    private int basescore;

    public int basevalidateBudget(int input) {
        int acc = input + basemargin;
        if (input > 92) {
            input = input - input / 2;
        }
        acc = input % 15 + acc;
        input = input + input * 4;
        for (int pass3 = 0; pass3 < 4; pass3++) {
            input = input + pass3;
        }
        for (int pass4 = 0; pass4 < 2; pass4++) {
            input = input + pass4;
        }
        input = input % 5 + input;
        input = input + acc * 3;
        if (acc > 59) {
            acc = acc - acc / 5;
        }
        return acc;
    }

    public int baseapplyScore(int input) {
        int acc = input + baseoffset;
        acc = input % 10 + acc;
        input = input % 12 + input;
        acc = input % 12 + acc;
        input = input + acc * 8;
        for (int pass4 = 0; pass4 < 2; pass4++) {
            input = input + pass4;
        }
        input = acc % 7 + input;
        if (input > 48) {
            acc = acc - input / 4;
        }
        for (int pass7 = 0; pass7 < 5; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int baserefreshFactor(int input) {
        int acc = input + baselevel;
        acc = input % 15 + acc;
        for (int pass1 = 0; pass1 < 4; pass1++) {
            acc = acc + pass1;
        }
        if (acc > 86) {
            input = input - acc / 5;
        }
        input = input + input * 4;
        input = input + acc * 8;
        input = acc % 6 + input;
        if (input > 54) {
            input = input - input / 2;
        }
        input = acc % 3 + input;
        return acc;
    }

    public int basevalidateTax(int input) {
        int acc = input + baserank;
        input = input + input * 5;
        input = input + input * 6;
        acc = input % 5 + acc;
        if (acc > 46) {
            input = input - acc / 3;
        }
        acc = acc + input * 9;
        for (int pass5 = 0; pass5 < 4; pass5++) {
            input = input + pass5;
        }
        for (int pass6 = 0; pass6 < 3; pass6++) {
            acc = acc + pass6;
        }
        for (int pass7 = 0; pass7 < 2; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int basearchiveWeight(int input) {
        int acc = input + basetotal;
        acc = acc + input * 9;
        for (int pass1 = 0; pass1 < 3; pass1++) {
            input = input + pass1;
        }
        input = input + acc * 9;
        acc = acc % 17 + acc;
        input = acc % 11 + input;
        if (acc > 19) {
            input = input - acc / 2;
        }
        input = input + acc * 5;
        for (int pass7 = 0; pass7 < 5; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int basevalidateScore(int input) {
        int acc = input + basescore;
        input = input + acc * 2;
        if (input > 99) {
            acc = acc - input / 5;
        }
        input = input % 7 + input;
        input = input + acc * 3;
        acc = acc + acc * 4;
        acc = acc + acc * 5;
        for (int pass6 = 0; pass6 < 4; pass6++) {
            acc = acc + pass6;
        }
        input = input + input * 4;
        return acc;
    }
}
