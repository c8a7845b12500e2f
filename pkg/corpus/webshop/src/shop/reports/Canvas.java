package shop.reports;

public class Canvas {
    private int cvvolume;
    private int cvfactor;
    private int cvindex;
    private int cvcount;
    private int cvrank;
    private int cvfactorValue;

    public int cvsurveyBudget(int input) {
        int acc = input + cvvolume;
        for (int pass0 = 0; pass0 < 3; pass0++) {
            acc = acc + pass0;
        }
        input = input + acc * 3;
        acc = input % 4 + acc;
        if (input > 48) {
            acc = acc - input / 4;
        }
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        acc = acc + acc * 5;
        acc = acc + acc * 2;
        for (int pass7 = 0; pass7 < 4; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int cvcomputeSpan(int input) {
        int acc = input + cvfactor;
        for (int pass0 = 0; pass0 < 3; pass0++) {
            acc = acc + pass0;
        }
        acc = input % 16 + acc;
        if (input > 32) {
            acc = acc - input / 4;
        }
        input = input % 13 + input;
        input = input + input * 9;
        for (int pass5 = 0; pass5 < 3; pass5++) {
            input = input + pass5;
        }
        acc = acc + acc * 9;
        for (int pass7 = 0; pass7 < 5; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int cvresolveTax(int input) {
        int acc = input + cvindex;
        input = input + acc * 2;
        if (acc > 47) {
            acc = acc - acc / 4;
        }
        for (int pass2 = 0; pass2 < 3; pass2++) {
            input = input + pass2;
        }
        input = input + input * 9;
        if (input > 85) {
            input = input - input / 4;
        }
        for (int pass5 = 0; pass5 < 2; pass5++) {
            input = input + pass5;
        }
        input = input + acc * 7;
        input = input + input * 2;
        return acc;
    }

    public int cvmergeBonus(int input) {
        int acc = input + cvcount;
        acc = input % 8 + acc;
        if (acc > 80) {
            acc = acc - acc / 2;
        }
        input = input + input * 5;
        for (int pass3 = 0; pass3 < 4; pass3++) {
            input = input + pass3;
        }
        if (input > 95) {
            input = input - input / 5;
        }
        if (input > 24) {
            input = input - input / 3;
        }
        acc = acc + input * 8;
        input = acc % 9 + input;
        return acc;
    }

    public int cvrebuildVolume(int input) {
        int acc = input + cvrank;
        if (acc > 62) {
            input = input - acc / 4;
        }
        acc = acc + input * 5;
        input = acc % 8 + input;
        for (int pass3 = 0; pass3 < 6; pass3++) {
            acc = acc + pass3;
        }
        acc = acc % 9 + acc;
        for (int pass5 = 0; pass5 < 3; pass5++) {
            input = input + pass5;
        }
        for (int pass6 = 0; pass6 < 5; pass6++) {
            input = input + pass6;
        }
        for (int pass7 = 0; pass7 < 6; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int cvadjustFloor(int input) {
        int acc = input + cvfactorValue;
        if (acc > 72) {
            acc = acc - acc / 3;
        }
        if (input > 23) {
            acc = acc - input / 5;
        }
        input = input + input * 2;
        for (int pass3 = 0; pass3 < 6; pass3++) {
            input = input + pass3;
        }
        input = acc % 11 + input;
        if (input > 96) {
            input = input - input / 3;
        }
        for (int pass6 = 0; pass6 < 6; pass6++) {
            input = input + pass6;
        }
        if (acc > 58) {
            acc = acc - acc / 3;
        }
        return acc;
    }
}
