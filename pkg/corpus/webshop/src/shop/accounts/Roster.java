package shop.accounts;

public class Roster {
    private int rosbonus;
    private int rostax;

    public int roscollectBalance(int input) {
        int acc = input + rosbonus;
        if (acc > 49) {
            acc = acc - acc / 5;
        }
        for (int pass1 = 0; pass1 < 5; pass1++) {
            input = input + pass1;
        }
        acc = acc + input * 9;
        acc = input % 8 + acc;
        return acc;
    }

    public int rossettleLimit(int input) {
        int acc = input + rostax;
        if (acc > 47) {
            input = input - acc / 3;
        }
        input = input % 7 + input;
        acc = input % 3 + acc;
        if (input > 80) {
            input = input - input / 3;
        }
        return acc;
    }
}
