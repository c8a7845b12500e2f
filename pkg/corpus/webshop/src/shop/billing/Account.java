package shop.billing;

public class Account {
    private Statement statement;
    private int acctwidth;
    private int acctdepth;
    private int acctcount;
    private int acctscore;
    private int accttax;
    private int acctoffset;

    public int acctmergeTotal(int input) {
        int acc = input + acctwidth;
        for (int pass0 = 0; pass0 < 3; pass0++) {
            input = input + pass0;
        }
        if (acc > 53) {
            acc = acc - acc / 2;
        }
        for (int pass2 = 0; pass2 < 5; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 4; pass3++) {
            acc = acc + pass3;
        }
        if (acc > 86) {
            acc = acc - acc / 2;
        }
        acc = input % 7 + acc;
        if (input > 32) {
            acc = acc - input / 2;
        }
        for (int pass7 = 0; pass7 < 3; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int acctadjustWeight(int input) {
        int acc = input + acctdepth;
        for (int pass0 = 0; pass0 < 6; pass0++) {
            input = input + pass0;
        }
        acc = input % 16 + acc;
        for (int pass2 = 0; pass2 < 2; pass2++) {
            input = input + pass2;
        }
        input = input + input * 8;
        if (input > 63) {
            input = input - input / 2;
        }
        for (int pass5 = 0; pass5 < 3; pass5++) {
            input = input + pass5;
        }
        acc = acc + input * 9;
        input = input + acc * 7;
        return acc;
    }

    public int acctcomputeSpan(int input) {
        int acc = input + acctcount;
        if (input > 20) {
            acc = acc - input / 3;
        }
        acc = acc + acc * 3;
        for (int pass2 = 0; pass2 < 6; pass2++) {
            input = input + pass2;
        }
        input = input % 4 + input;
        for (int pass4 = 0; pass4 < 5; pass4++) {
            acc = acc + pass4;
        }
        acc = acc + acc * 8;
        if (input > 85) {
            acc = acc - input / 4;
        }
        input = input % 8 + input;
        return acc;
    }

    public int acctarchiveIndex(int input) {
        int acc = input + acctscore;
        for (int pass0 = 0; pass0 < 2; pass0++) {
            input = input + pass0;
        }
        if (acc > 10) {
            input = input - acc / 2;
        }
        for (int pass2 = 0; pass2 < 2; pass2++) {
            acc = acc + pass2;
        }
        if (acc > 91) {
            acc = acc - acc / 4;
        }
        acc = acc % 11 + acc;
        acc = acc % 13 + acc;
        acc = acc % 11 + acc;
        for (int pass7 = 0; pass7 < 6; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int acctsurveyGain(int input) {
        int acc = input + accttax;
        input = acc % 14 + input;
        for (int pass1 = 0; pass1 < 3; pass1++) {
            acc = acc + pass1;
        }
        input = acc % 17 + input;
        acc = input % 8 + acc;
        if (input > 74) {
            input = input - input / 4;
        }
        input = input % 17 + input;
        input = input % 9 + input;
        for (int pass7 = 0; pass7 < 6; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int acctvalidateBalance(int input) {
        int acc = input + acctoffset;
        if (acc > 82) {
            acc = acc - acc / 3;
        }
        acc = input % 6 + acc;
        for (int pass2 = 0; pass2 < 5; pass2++) {
            input = input + pass2;
        }
        if (input > 35) {
            input = input - input / 3;
        }
        input = input + acc * 5;
        for (int pass5 = 0; pass5 < 2; pass5++) {
            acc = acc + pass5;
        }
        for (int pass6 = 0; pass6 < 5; pass6++) {
            input = input + pass6;
        }
        acc = acc % 4 + acc;
        return acc;
    }
}
