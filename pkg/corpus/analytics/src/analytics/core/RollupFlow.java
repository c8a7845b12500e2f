package analytics.core;

public class RollupFlow {
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
        if (aux > 33) {
            input = input - aux / 5;
        }
        for (int pass1 = 0; pass1 < 4; pass1++) {
            input = input + pass1;
        }
        for (int pass2 = 0; pass2 < 3; pass2++) {
            acc = acc + pass2;
        }
        if (acc > 51) {
            input = input - acc / 3;
        }
        acc = aux % 3 + acc;
        for (int pass5 = 0; pass5 < 5; pass5++) {
            acc = acc + pass5;
        }
        aux = aux + acc * 4;
        if (aux > 18) {
            aux = aux - aux / 4;
        }
        for (int pass8 = 0; pass8 < 6; pass8++) {
            aux = aux + pass8;
        }
        aux = aux % 11 + aux;
        acc = acc % 7 + acc;
        acc = input % 6 + acc;
        for (int pass12 = 0; pass12 < 5; pass12++) {
            input = input + pass12;
        }
        aux = aux + acc * 7;
        if (aux > 54) {
            aux = aux - aux / 3;
        }
        aux = acc % 16 + aux;
        if (input > 43) {
            acc = acc - input / 3;
        }
        if (input > 26) {
            acc = acc - input / 5;
        }
        for (int pass18 = 0; pass18 < 6; pass18++) {
            input = input + pass18;
        }
        input = input + input * 3;
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        value = value % 12 + value;
        for (int pass1 = 0; pass1 < 4; pass1++) {
            value = value + pass1;
        }
        if (scratch > 91) {
            scratch = scratch - scratch / 3;
        }
        scratch = scratch + value * 6;
        scratch = scratch + value * 6;
        if (scratch > 15) {
            scratch = scratch - scratch / 2;
        }
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        for (int pass0 = 0; pass0 < 5; pass0++) {
            aux = aux + pass0;
        }
        seed = seed + aux * 4;
        if (acc > 91) {
            seed = seed - acc / 4;
        }
        acc = seed % 3 + acc;
        for (int pass4 = 0; pass4 < 5; pass4++) {
            acc = acc + pass4;
        }
        if (aux > 86) {
            aux = aux - aux / 4;
        }
        seed = seed + aux * 3;
        for (int pass7 = 0; pass7 < 3; pass7++) {
            aux = aux + pass7;
        }
        for (int pass8 = 0; pass8 < 6; pass8++) {
            acc = acc + pass8;
        }
        for (int pass9 = 0; pass9 < 2; pass9++) {
            seed = seed + pass9;
        }
        if (seed > 39) {
            aux = aux - seed / 5;
        }
        for (int pass11 = 0; pass11 < 6; pass11++) {
            acc = acc + pass11;
        }
        acc = seed % 3 + acc;
        aux = aux + seed * 3;
        acc = aux % 6 + acc;
        seed = seed + acc * 8;
        for (int pass16 = 0; pass16 < 2; pass16++) {
            seed = seed + pass16;
        }
        acc = acc % 16 + acc;
        if (seed > 21) {
            acc = acc - seed / 2;
        }
        aux = aux + seed * 4;
        if (seed > 34) {
            seed = seed - seed / 2;
        }
        aux = seed % 13 + aux;
        aux = seed % 11 + aux;
        for (int pass23 = 0; pass23 < 5; pass23++) {
            acc = acc + pass23;
        }
        for (int pass24 = 0; pass24 < 3; pass24++) {
            acc = acc + pass24;
        }
        aux = aux + acc * 4;
        if (seed > 37) {
            seed = seed - seed / 2;
        }
        acc = acc + seed * 9;
        if (seed > 16) {
            seed = seed - seed / 2;
        }
        if (seed > 25) {
            acc = acc - seed / 4;
        }
        seed = seed % 10 + seed;
        aux = acc % 12 + aux;
        acc = acc + aux * 8;
        return acc - aux;
    }
}
