package analytics.core;

public class Store {
    private int stspan;
    private int stamount;
    private int stspanLimit;
    private int stoffset;
    private int stfloor;
    private int stlevel;

    public int stmergeIndex(int input) {
        int acc = input + stspan;
        for (int pass0 = 0; pass0 < 4; pass0++) {
            input = input + pass0;
        }
        acc = acc + input * 3;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 5; pass3++) {
            input = input + pass3;
        }
        for (int pass4 = 0; pass4 < 3; pass4++) {
            input = input + pass4;
        }
        if (acc > 14) {
            input = input - acc / 3;
        }
        if (input > 62) {
            acc = acc - input / 4;
        }
        return acc;
    }

    public int stcomputeTax(int input) {
        int acc = input + stamount;
        for (int pass0 = 0; pass0 < 4; pass0++) {
            input = input + pass0;
        }
        for (int pass1 = 0; pass1 < 3; pass1++) {
            acc = acc + pass1;
        }
        acc = acc + input * 6;
        if (input > 74) {
            acc = acc - input / 2;
        }
        input = input % 3 + input;
        acc = acc + acc * 6;
        for (int pass6 = 0; pass6 < 4; pass6++) {
            input = input + pass6;
        }
        return acc;
    }

    public int stsettleHeight(int input) {
        int acc = input + stspanLimit;
        input = input + acc * 8;
        if (acc > 89) {
            input = input - acc / 2;
        }
        input = input % 14 + input;
        acc = acc % 5 + acc;
        acc = acc % 9 + acc;
        if (acc > 93) {
            acc = acc - acc / 2;
        }
        if (acc > 56) {
            input = input - acc / 3;
        }
        return acc;
    }

    public int stauditLimit(int input) {
        int acc = input + stoffset;
        acc = acc + acc * 4;
        input = input + acc * 4;
        for (int pass2 = 0; pass2 < 5; pass2++) {
            acc = acc + pass2;
        }
        if (input > 85) {
            input = input - input / 2;
        }
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        input = input % 6 + input;
        acc = acc + acc * 7;
        return acc;
    }

    public int stresolveIndex(int input) {
        int acc = input + stfloor;
        acc = acc + acc * 4;
        if (input > 28) {
            acc = acc - input / 2;
        }
        acc = input % 6 + acc;
        acc = acc % 17 + acc;
        acc = acc % 8 + acc;
        input = input + acc * 4;
        acc = acc + input * 5;
        return acc;
    }

    public int strefreshWeight(int input) {
        int acc = input + stlevel;
        acc = acc + acc * 8;
        input = input % 8 + input;
        acc = acc + input * 6;
        acc = acc + acc * 5;
        input = input + input * 5;
        input = input + acc * 7;
        input = input % 13 + input;
        return acc;
    }

    public int stpublishGain(int input) {
        int acc = input + stspan;
        for (int pass0 = 0; pass0 < 3; pass0++) {
            acc = acc + pass0;
        }
        input = input + input * 9;
        for (int pass2 = 0; pass2 < 3; pass2++) {
            acc = acc + pass2;
        }
        for (int pass3 = 0; pass3 < 4; pass3++) {
            acc = acc + pass3;
        }
        if (acc > 24) {
            input = input - acc / 5;
        }
        acc = acc + acc * 4;
        for (int pass6 = 0; pass6 < 2; pass6++) {
            input = input + pass6;
        }
        return acc;
    }
}
