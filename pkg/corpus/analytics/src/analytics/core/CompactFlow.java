package analytics.core;

public class CompactFlow {
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
        aux = aux + input * 3;
        for (int pass1 = 0; pass1 < 2; pass1++) {
            input = input + pass1;
        }
        acc = input % 16 + acc;
        input = input % 9 + input;
        if (input > 32) {
            aux = aux - input / 3;
        }
        if (input > 83) {
            aux = aux - input / 5;
        }
        input = aux % 9 + input;
        for (int pass7 = 0; pass7 < 3; pass7++) {
            aux = aux + pass7;
        }
        acc = aux % 17 + acc;
        if (aux > 40) {
            input = input - aux / 2;
        }
        if (aux > 96) {
            acc = acc - aux / 3;
        }
        for (int pass11 = 0; pass11 < 5; pass11++) {
            aux = aux + pass11;
        }
        aux = aux + aux * 3;
        if (input > 37) {
            input = input - input / 4;
        }
        if (aux > 56) {
            acc = acc - aux / 3;
        }
        acc = acc + input * 8;
        if (input > 30) {
            input = input - input / 3;
        }
        for (int pass17 = 0; pass17 < 5; pass17++) {
            input = input + pass17;
        }
        input = aux % 12 + input;
        aux = input % 3 + aux;
        for (int pass20 = 0; pass20 < 5; pass20++) {
            input = input + pass20;
        }
        for (int pass21 = 0; pass21 < 4; pass21++) {
            aux = aux + pass21;
        }
        input = acc % 9 + input;
        acc = acc + acc * 4;
        for (int pass24 = 0; pass24 < 3; pass24++) {
            acc = acc + pass24;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        scratch = scratch + scratch * 4;
        value = value + scratch * 5;
        if (value > 36) {
            scratch = scratch - value / 2;
        }
        scratch = scratch % 3 + scratch;
        if (scratch > 77) {
            value = value - scratch / 2;
        }
        if (value > 18) {
            value = value - value / 4;
        }
        scratch = scratch + value * 7;
        value = scratch % 4 + value;
        state0 = scratch;
    }
}
