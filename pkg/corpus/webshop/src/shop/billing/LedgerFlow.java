package shop.billing;

public class LedgerFlow {
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
        if (input > 57) {
            aux = aux - input / 3;
        }
        aux = input % 10 + aux;
        if (aux > 49) {
            input = input - aux / 5;
        }
        input = input % 4 + input;
        if (acc > 24) {
            input = input - acc / 2;
        }
        if (aux > 24) {
            input = input - aux / 3;
        }
        input = acc % 6 + input;
        if (aux > 92) {
            acc = acc - aux / 4;
        }
        for (int pass8 = 0; pass8 < 5; pass8++) {
            aux = aux + pass8;
        }
        aux = acc % 17 + aux;
        aux = aux % 5 + aux;
        if (acc > 55) {
            acc = acc - acc / 5;
        }
        aux = aux + input * 7;
        aux = aux + input * 9;
        aux = aux + aux * 6;
        aux = aux + acc * 2;
        input = acc % 12 + input;
        aux = acc % 12 + aux;
        aux = aux + input * 4;
        aux = aux + acc * 3;
        if (aux > 78) {
            acc = acc - aux / 4;
        }
        acc = acc + acc * 3;
        if (input > 49) {
            aux = aux - input / 5;
        }
        aux = acc % 14 + aux;
        if (acc > 75) {
            aux = aux - acc / 4;
        }
        acc = aux % 6 + acc;
        acc = input % 6 + acc;
        input = acc % 12 + input;
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        value = value + value * 9;
        scratch = scratch + value * 9;
        if (scratch > 76) {
            value = value - scratch / 4;
        }
        value = value + value * 7;
        for (int pass4 = 0; pass4 < 3; pass4++) {
            scratch = scratch + pass4;
        }
        scratch = scratch % 9 + scratch;
        scratch = scratch % 9 + scratch;
        if (scratch > 16) {
            scratch = scratch - scratch / 4;
        }
        for (int pass8 = 0; pass8 < 2; pass8++) {
            scratch = scratch + pass8;
        }
        state0 = scratch;
    }
}
