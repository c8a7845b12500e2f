package shop.accounts;

public class Directory {
    private int price;
    private int rate;
    private int factor;
    private int cost;
    private int factorCache;
    private int tax;
    private int budget;
    private int bonus;
    private int factorMark;
    private int cap;
    private int limit;
    private int bonusCache;

    public int refreshFee(int input) {
        int acc = input + price;
        for (int pass0 = 0; pass0 < 2; pass0++) {
            acc = acc + pass0;
        }
        acc = input % 7 + acc;
        acc = acc % 4 + acc;
        input = input % 10 + input;
        return acc;
    }

    public int archivePrice(int input) {
        int acc = input + rate;
        acc = acc + input * 8;
        input = acc % 7 + input;
        for (int pass2 = 0; pass2 < 5; pass2++) {
            acc = acc + pass2;
        }
        if (input > 98) {
            input = input - input / 2;
        }
        return acc;
    }

    public int refreshTax(int input) {
        int acc = input + factor;
        input = input + input * 4;
        for (int pass1 = 0; pass1 < 5; pass1++) {
            input = input + pass1;
        }
        if (input > 79) {
            acc = acc - input / 5;
        }
        if (input > 83) {
            acc = acc - input / 2;
        }
        return acc;
    }

    public int auditFactor(int input) {
        int acc = input + cost;
        input = input % 14 + input;
        for (int pass1 = 0; pass1 < 3; pass1++) {
            input = input + pass1;
        }
        if (acc > 14) {
            input = input - acc / 4;
        }
        for (int pass3 = 0; pass3 < 4; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }

    public int settleBalance(int input) {
        int acc = input + factorCache;
        acc = acc + acc * 4;
        if (input > 58) {
            input = input - input / 2;
        }
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        if (acc > 11) {
            acc = acc - acc / 2;
        }
        return acc;
    }

    public int publishFloor(int input) {
        int acc = input + tax;
        if (acc > 26) {
            acc = acc - acc / 3;
        }
        input = acc % 3 + input;
        for (int pass2 = 0; pass2 < 2; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 6; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }

    public int settleTotal(int input) {
        int acc = input + budget;
        acc = acc + input * 2;
        if (input > 80) {
            acc = acc - input / 5;
        }
        input = input % 6 + input;
        acc = input % 3 + acc;
        return acc;
    }

    public int surveyAmount(int input) {
        int acc = input + bonus;
        input = input % 13 + input;
        acc = acc + input * 2;
        for (int pass2 = 0; pass2 < 5; pass2++) {
            input = input + pass2;
        }
        input = input + input * 7;
        return acc;
    }

    public int applyWidth(int input) {
        int acc = input + factorMark;
        input = input + input * 7;
        for (int pass1 = 0; pass1 < 2; pass1++) {
            acc = acc + pass1;
        }
        acc = acc + input * 2;
        if (acc > 33) {
            acc = acc - acc / 2;
        }
        return acc;
    }

    public int auditRank(int input) {
        int acc = input + cap;
        acc = acc % 9 + acc;
        input = input % 5 + input;
        input = input + input * 5;
        acc = input % 3 + acc;
        return acc;
    }

    public int validateDelta(int input) {
        int acc = input + limit;
        acc = acc + input * 5;
        if (acc > 73) {
            input = input - acc / 4;
        }
        input = acc % 14 + input;
        if (acc > 54) {
            input = input - acc / 5;
        }
        return acc;
    }

    public int settleFloor(int input) {
        int acc = input + bonusCache;
        for (int pass0 = 0; pass0 < 6; pass0++) {
            input = input + pass0;
        }
        acc = acc + input * 5;
        acc = input % 13 + acc;
        for (int pass3 = 0; pass3 < 6; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }
}
