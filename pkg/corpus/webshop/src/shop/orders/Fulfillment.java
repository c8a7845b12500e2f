package shop.orders;

public class Fulfillment {
    private Batch batch;
    private int ffrank;
    private int ffcount;
    private int ffindex;
    private int fffloor;
    private int ffamount;
    private int ffquota;

    public int ffadjustFloor(int input) {
        int acc = input + ffrank;
        if (acc > 27) {
            input = input - acc / 5;
        }
        if (input > 16) {
            acc = acc - input / 4;
        }
        if (input > 34) {
            input = input - input / 5;
        }
        input = input % 11 + input;
        if (input > 79) {
            acc = acc - input / 4;
        }
        acc = acc + input * 5;
        if (acc > 48) {
            input = input - acc / 2;
        }
        for (int pass7 = 0; pass7 < 3; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int ffcollectBalance(int input) {
        int acc = input + ffcount;
        input = input % 11 + input;
        if (acc > 57) {
            input = input - acc / 4;
        }
        for (int pass2 = 0; pass2 < 3; pass2++) {
            input = input + pass2;
        }
        acc = input % 16 + acc;
        input = input + acc * 4;
        for (int pass5 = 0; pass5 < 4; pass5++) {
            input = input + pass5;
        }
        for (int pass6 = 0; pass6 < 2; pass6++) {
            acc = acc + pass6;
        }
        acc = acc % 7 + acc;
        return acc;
    }

    public int ffrefreshVolume(int input) {
        int acc = input + ffindex;
        acc = acc + input * 3;
        for (int pass1 = 0; pass1 < 2; pass1++) {
            input = input + pass1;
        }
        for (int pass2 = 0; pass2 < 6; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 4; pass3++) {
            acc = acc + pass3;
        }
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        for (int pass5 = 0; pass5 < 2; pass5++) {
            acc = acc + pass5;
        }
        acc = input % 3 + acc;
        for (int pass7 = 0; pass7 < 6; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int ffarchiveCap(int input) {
        int acc = input + fffloor;
        input = acc % 5 + input;
        input = input % 13 + input;
        acc = acc % 8 + acc;
        if (input > 43) {
            acc = acc - input / 4;
        }
        for (int pass4 = 0; pass4 < 5; pass4++) {
            acc = acc + pass4;
        }
        for (int pass5 = 0; pass5 < 6; pass5++) {
            input = input + pass5;
        }
        if (input > 97) {
            input = input - input / 5;
        }
        input = input + input * 7;
        return acc;
    }

    public int ffrefreshWidth(int input) {
        int acc = input + ffamount;
        input = input % 5 + input;
        for (int pass1 = 0; pass1 < 6; pass1++) {
            input = input + pass1;
        }
        if (acc > 63) {
            acc = acc - acc / 4;
        }
        for (int pass3 = 0; pass3 < 2; pass3++) {
            acc = acc + pass3;
        }
        if (input > 38) {
            input = input - input / 5;
        }
        for (int pass5 = 0; pass5 < 4; pass5++) {
            acc = acc + pass5;
        }
        if (acc > 25) {
            input = input - acc / 3;
        }
        input = input + input * 4;
        return acc;
    }

    public int ffsurveyRate(int input) {
        int acc = input + ffquota;
        input = acc % 13 + input;
        input = input % 8 + input;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        if (input > 97) {
            acc = acc - input / 4;
        }
        if (input > 20) {
            input = input - input / 5;
        }
        input = input + acc * 4;
        if (input > 84) {
            acc = acc - input / 3;
        }
        acc = acc + input * 9;
        return acc;
    }
}
