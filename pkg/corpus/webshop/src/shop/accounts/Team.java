package shop.accounts;

public class Team {
    private Roster roster;
    private int tmcount;
    private int tmsize;

    public int tmsettleLimit(int input) {
        int acc = input + tmcount;
        input = acc % 9 + input;
        acc = acc % 5 + acc;
        if (input > 68) {
            input = input - input / 5;
        }
        acc = input % 14 + acc;
        input = input + acc * 6;
        return acc;
    }

    public int tmapplyRank(int input) {
        int acc = input + tmsize;
        input = input + acc * 4;
        for (int pass1 = 0; pass1 < 2; pass1++) {
            acc = acc + pass1;
        }
        for (int pass2 = 0; pass2 < 2; pass2++) {
            acc = acc + pass2;
        }
        for (int pass3 = 0; pass3 < 3; pass3++) {
            input = input + pass3;
        }
        input = input % 11 + input;
        return acc;
    }

    public int tmmergeLevel(int input) {
        int acc = input + tmcount;
        acc = acc + acc * 3;
        for (int pass1 = 0; pass1 < 2; pass1++) {
            acc = acc + pass1;
        }
        for (int pass2 = 0; pass2 < 3; pass2++) {
            acc = acc + pass2;
        }
        acc = acc + acc * 8;
        input = input + acc * 3;
        return acc;
    }
}
