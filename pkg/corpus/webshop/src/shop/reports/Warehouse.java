package shop.reports;

public class Warehouse {
    private int rank;
    private int level;
    private int tax;
    private int balance;
    private int balanceMark;
    private int levelMark;
    private int budget;
    private int margin;
    private int count;
    private int price;
    private int limit;
    private int delta;

    public int applyPrice(int input) {
        int acc = input + rank;
        acc = acc + input * 6;
        acc = acc % 13 + acc;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 2; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }

    public int resolveWeight(int input) {
        int acc = input + level;
        if (acc > 34) {
            acc = acc - acc / 2;
        }
        if (acc > 32) {
            acc = acc - acc / 5;
        }
        for (int pass2 = 0; pass2 < 5; pass2++) {
            input = input + pass2;
        }
        acc = input % 12 + acc;
        return acc;
    }

    public int publishBalance(int input) {
        int acc = input + tax;
        if (acc > 55) {
            acc = acc - acc / 3;
        }
        acc = acc + input * 8;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 6; pass3++) {
            input = input + pass3;
        }
        return acc;
    }

    public int auditFloor(int input) {
        int acc = input + balance;
        for (int pass0 = 0; pass0 < 6; pass0++) {
            input = input + pass0;
        }
        for (int pass1 = 0; pass1 < 5; pass1++) {
            acc = acc + pass1;
        }
        if (input > 44) {
            acc = acc - input / 5;
        }
        acc = input % 4 + acc;
        return acc;
    }

    public int validateCount(int input) {
        int acc = input + balanceMark;
        if (acc > 17) {
            acc = acc - acc / 3;
        }
        for (int pass1 = 0; pass1 < 2; pass1++) {
            acc = acc + pass1;
        }
        if (input > 96) {
            acc = acc - input / 5;
        }
        for (int pass3 = 0; pass3 < 4; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }

    public int surveyTax(int input) {
        int acc = input + levelMark;
        for (int pass0 = 0; pass0 < 3; pass0++) {
            input = input + pass0;
        }
        if (acc > 69) {
            acc = acc - acc / 4;
        }
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        input = input + input * 6;
        return acc;
    }

    public int adjustGain(int input) {
        int acc = input + budget;
        if (acc > 22) {
            input = input - acc / 4;
        }
        acc = acc + input * 7;
        acc = acc + input * 9;
        for (int pass3 = 0; pass3 < 6; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }

    public int adjustTax(int input) {
        int acc = input + margin;
        input = input + input * 9;
        acc = acc + acc * 4;
        if (input > 80) {
            acc = acc - input / 2;
        }
        if (acc > 53) {
            acc = acc - acc / 3;
        }
        return acc;
    }

    public int collectDepth(int input) {
        int acc = input + count;
        input = input + acc * 7;
        for (int pass1 = 0; pass1 < 5; pass1++) {
            input = input + pass1;
        }
        acc = acc + acc * 3;
        input = input % 16 + input;
        return acc;
    }

    public int auditSpan(int input) {
        int acc = input + price;
        for (int pass0 = 0; pass0 < 4; pass0++) {
            acc = acc + pass0;
        }
        for (int pass1 = 0; pass1 < 5; pass1++) {
            input = input + pass1;
        }
        if (input > 52) {
            acc = acc - input / 4;
        }
        if (input > 99) {
            input = input - input / 4;
        }
        return acc;
    }

    public int applySize(int input) {
        int acc = input + limit;
        if (input > 31) {
            input = input - input / 2;
        }
        for (int pass1 = 0; pass1 < 4; pass1++) {
            input = input + pass1;
        }
        if (acc > 14) {
            acc = acc - acc / 5;
        }
        acc = acc + acc * 3;
        return acc;
    }

    public int auditQuota(int input) {
        int acc = input + delta;
        acc = acc + input * 7;
        if (input > 78) {
            acc = acc - input / 5;
        }
        if (input > 46) {
            acc = acc - input / 2;
        }
        for (int pass3 = 0; pass3 < 2; pass3++) {
            acc = acc + pass3;
        }
        return acc;
    }
}
