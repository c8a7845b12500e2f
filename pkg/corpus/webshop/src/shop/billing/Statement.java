package shop.billing;

public class Statement {
    private int lineamount;
    private int linewidth;
    private int lineprice;
    private int linerank;
    private int linequota;
    private int linetax;

    public int linecollectLevel(int input) {
        int acc = input + lineamount;
        if (acc > 69) {
            acc = acc - acc / 4;
        }
        if (acc > 88) {
            acc = acc - acc / 5;
        }
        input = acc % 9 + input;
        for (int pass3 = 0; pass3 < 2; pass3++) {
            input = input + pass3;
        }
        input = acc % 14 + input;
        for (int pass5 = 0; pass5 < 2; pass5++) {
            acc = acc + pass5;
        }
        for (int pass6 = 0; pass6 < 3; pass6++) {
            input = input + pass6;
        }
        if (acc > 73) {
            acc = acc - acc / 2;
        }
        return acc;
    }

    public int lineadjustHeight(int input) {
        int acc = input + linewidth;
        acc = acc + input * 2;
        acc = acc % 17 + acc;
        acc = acc % 5 + acc;
        if (input > 88) {
            acc = acc - input / 5;
        }
        input = input + input * 5;
        if (input > 71) {
            input = input - input / 2;
        }
        for (int pass6 = 0; pass6 < 4; pass6++) {
            input = input + pass6;
        }
        input = input + acc * 7;
        return acc;
    }

    public int lineauditTotal(int input) {
        int acc = input + lineprice;
        if (input > 82) {
            acc = acc - input / 3;
        }
        acc = acc + acc * 5;
        acc = acc + input * 2;
        for (int pass3 = 0; pass3 < 5; pass3++) {
            input = input + pass3;
        }
        input = acc % 11 + input;
        for (int pass5 = 0; pass5 < 6; pass5++) {
            acc = acc + pass5;
        }
        if (input > 42) {
            acc = acc - input / 3;
        }
        for (int pass7 = 0; pass7 < 2; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int lineauditVolume(int input) {
        int acc = input + linerank;
        acc = input % 13 + acc;
        if (acc > 78) {
            input = input - acc / 4;
        }
        input = input + acc * 4;
        acc = acc % 13 + acc;
        acc = input % 5 + acc;
        input = input + acc * 3;
        for (int pass6 = 0; pass6 < 4; pass6++) {
            input = input + pass6;
        }
        input = input + input * 4;
        return acc;
    }

    public int linepublishLimit(int input) {
        int acc = input + linequota;
        input = acc % 12 + input;
        acc = acc % 6 + acc;
        input = input + acc * 6;
        for (int pass3 = 0; pass3 < 4; pass3++) {
            acc = acc + pass3;
        }
        input = input + acc * 4;
        if (acc > 33) {
            acc = acc - acc / 4;
        }
        for (int pass6 = 0; pass6 < 2; pass6++) {
            input = input + pass6;
        }
        if (input > 43) {
            input = input - input / 4;
        }
        return acc;
    }

    public int lineapplyVolume(int input) {
        int acc = input + linetax;
        if (acc > 10) {
            acc = acc - acc / 2;
        }
        if (input > 84) {
            acc = acc - input / 4;
        }
        acc = acc + acc * 6;
        input = input % 8 + input;
        if (acc > 36) {
            acc = acc - acc / 3;
        }
        input = acc % 7 + input;
        input = input + acc * 4;
        if (acc > 31) {
            acc = acc - acc / 4;
        }
        return acc;
    }
}
