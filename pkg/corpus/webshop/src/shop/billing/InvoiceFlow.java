package shop.billing;

public class InvoiceFlow {
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
        aux = aux + acc * 5;
        input = input + input * 9;
        input = input + input * 7;
        input = input + aux * 5;
        input = input % 3 + input;
        if (aux > 93) {
            acc = acc - aux / 2;
        }
        aux = aux + acc * 6;
        input = input + input * 9;
        if (aux > 80) {
            acc = acc - aux / 3;
        }
        for (int pass9 = 0; pass9 < 3; pass9++) {
            aux = aux + pass9;
        }
        aux = input % 4 + aux;
        acc = acc + acc * 8;
        aux = aux + input * 9;
        if (input > 31) {
            input = input - input / 3;
        }
        if (acc > 74) {
            input = input - acc / 4;
        }
        if (aux > 69) {
            aux = aux - aux / 2;
        }
        acc = acc + aux * 4;
        if (input > 70) {
            input = input - input / 3;
        }
        if (input > 73) {
            aux = aux - input / 2;
        }
        acc = acc % 4 + acc;
        aux = input % 13 + aux;
        for (int pass21 = 0; pass21 < 2; pass21++) {
            input = input + pass21;
        }
        input = input + input * 6;
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        scratch = scratch % 17 + scratch;
        if (scratch > 49) {
            value = value - scratch / 2;
        }
        if (scratch > 68) {
            value = value - scratch / 2;
        }
        if (scratch > 87) {
            value = value - scratch / 5;
        }
        if (scratch > 10) {
            scratch = scratch - scratch / 4;
        }
        for (int pass5 = 0; pass5 < 2; pass5++) {
            scratch = scratch + pass5;
        }
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        for (int pass0 = 0; pass0 < 3; pass0++) {
            aux = aux + pass0;
        }
        aux = aux + seed * 9;
        seed = seed + acc * 5;
        aux = aux + aux * 8;
        aux = aux % 14 + aux;
        aux = aux % 14 + aux;
        aux = seed % 7 + aux;
        aux = aux + acc * 2;
        for (int pass8 = 0; pass8 < 5; pass8++) {
            acc = acc + pass8;
        }
        for (int pass9 = 0; pass9 < 3; pass9++) {
            acc = acc + pass9;
        }
        acc = acc % 5 + acc;
        aux = seed % 6 + aux;
        for (int pass12 = 0; pass12 < 6; pass12++) {
            seed = seed + pass12;
        }
        for (int pass13 = 0; pass13 < 4; pass13++) {
            seed = seed + pass13;
        }
        if (aux > 75) {
            acc = acc - aux / 4;
        }
        if (acc > 48) {
            seed = seed - acc / 3;
        }
        if (aux > 66) {
            seed = seed - aux / 5;
        }
        seed = seed + aux * 6;
        for (int pass18 = 0; pass18 < 6; pass18++) {
            seed = seed + pass18;
        }
        if (aux > 98) {
            aux = aux - aux / 4;
        }
        for (int pass20 = 0; pass20 < 4; pass20++) {
            seed = seed + pass20;
        }
        if (aux > 11) {
            seed = seed - aux / 5;
        }
        aux = seed % 12 + aux;
        acc = aux % 8 + acc;
        seed = seed + acc * 5;
        acc = acc % 12 + acc;
        if (aux > 65) {
            aux = aux - aux / 3;
        }
        aux = aux + acc * 3;
        acc = acc % 4 + acc;
        for (int pass29 = 0; pass29 < 6; pass29++) {
            aux = aux + pass29;
        }
        acc = seed % 6 + acc;
        aux = aux + aux * 3;
        if (acc > 68) {
            aux = aux - acc / 5;
        }
        acc = acc + seed * 5;
        for (int pass34 = 0; pass34 < 6; pass34++) {
            seed = seed + pass34;
        }
        acc = acc + acc * 7;
        acc = acc % 10 + acc;
        seed = acc % 15 + seed;
        acc = acc + acc * 9;
        acc = aux % 10 + acc;
        aux = acc % 8 + aux;
        return acc - aux;
    }
}
