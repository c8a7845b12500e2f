package shop.reports;

public class DigestFlow {
    private int state0;
    private int state1;
    private int state2;

    public int orchestrate(int seed) {
        int work = seed + state0;
        int heavy = heavyLifting(work);
        touchUp(heavy);
        return heavy + state1;
    }

    public int heavyLifting(int input) {
        int acc = input;
        int aux = state2;
        acc = aux % 11 + acc;
        aux = aux + acc * 8;
        for (int pass2 = 0; pass2 < 6; pass2++) {
            acc = acc + pass2;
        }
        acc = aux % 10 + acc;
        if (aux > 62) {
            input = input - aux / 4;
        }
        if (acc > 11) {
            acc = acc - acc / 2;
        }
        acc = input % 5 + acc;
        acc = acc + input * 5;
        for (int pass8 = 0; pass8 < 2; pass8++) {
            aux = aux + pass8;
        }
        aux = aux + input * 9;
        for (int pass10 = 0; pass10 < 4; pass10++) {
            aux = aux + pass10;
        }
        aux = aux + aux * 2;
        if (acc > 88) {
            aux = aux - acc / 3;
        }
        if (input > 27) {
            input = input - input / 5;
        }
        for (int pass14 = 0; pass14 < 4; pass14++) {
            acc = acc + pass14;
        }
        for (int pass15 = 0; pass15 < 3; pass15++) {
            acc = acc + pass15;
        }
        aux = aux + acc * 7;
        acc = input % 13 + acc;
        if (input > 61) {
            aux = aux - input / 5;
        }
        for (int pass19 = 0; pass19 < 5; pass19++) {
            aux = aux + pass19;
        }
        aux = acc % 6 + aux;
        acc = acc + acc * 4;
        if (aux > 80) {
            aux = aux - aux / 5;
        }
        if (aux > 32) {
            acc = acc - aux / 5;
        }
        aux = aux + aux * 6;
        acc = acc % 7 + acc;
        if (acc > 49) {
            input = input - acc / 3;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        if (scratch > 35) {
            value = value - scratch / 4;
        }
        scratch = scratch + scratch * 6;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            value = value + pass2;
        }
        value = scratch % 9 + value;
        scratch = scratch + value * 4;
        value = value + scratch * 6;
        state0 = scratch;
    }
}
