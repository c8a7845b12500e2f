package shop.accounts;

public class RecoveryFlow {
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
        if (aux > 50) {
            aux = aux - aux / 5;
        }
        acc = acc + aux * 4;
        acc = aux % 17 + acc;
        if (input > 58) {
            input = input - input / 4;
        }
        input = acc % 9 + input;
        if (acc > 83) {
            input = input - acc / 2;
        }
        if (input > 11) {
            input = input - input / 3;
        }
        for (int pass7 = 0; pass7 < 3; pass7++) {
            input = input + pass7;
        }
        input = input + acc * 6;
        if (acc > 76) {
            aux = aux - acc / 3;
        }
        aux = aux + input * 7;
        acc = acc + aux * 3;
        input = input % 3 + input;
        for (int pass13 = 0; pass13 < 2; pass13++) {
            aux = aux + pass13;
        }
        aux = aux + input * 3;
        if (acc > 53) {
            acc = acc - acc / 3;
        }
        for (int pass16 = 0; pass16 < 5; pass16++) {
            aux = aux + pass16;
        }
        acc = input % 11 + acc;
        aux = acc % 14 + aux;
        if (acc > 22) {
            input = input - acc / 5;
        }
        if (input > 22) {
            acc = acc - input / 3;
        }
        aux = input % 3 + aux;
        aux = aux + acc * 4;
        acc = acc % 15 + acc;
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        if (value > 43) {
            value = value - value / 3;
        }
        for (int pass1 = 0; pass1 < 5; pass1++) {
            scratch = scratch + pass1;
        }
        value = value + value * 3;
        scratch = scratch + value * 2;
        if (scratch > 72) {
            value = value - scratch / 2;
        }
        value = value + scratch * 4;
        if (value > 90) {
            scratch = scratch - value / 4;
        }
        for (int pass7 = 0; pass7 < 6; pass7++) {
            scratch = scratch + pass7;
        }
        scratch = value % 11 + scratch;
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        for (int pass0 = 0; pass0 < 4; pass0++) {
            acc = acc + pass0;
        }
        acc = acc % 4 + acc;
        acc = acc + acc * 4;
        acc = acc + aux * 4;
        if (acc > 10) {
            aux = aux - acc / 4;
        }
        seed = seed + acc * 6;
        for (int pass6 = 0; pass6 < 2; pass6++) {
            seed = seed + pass6;
        }
        for (int pass7 = 0; pass7 < 2; pass7++) {
            seed = seed + pass7;
        }
        if (seed > 37) {
            acc = acc - seed / 5;
        }
        seed = seed + seed * 5;
        aux = aux + acc * 4;
        if (acc > 99) {
            acc = acc - acc / 5;
        }
        aux = acc % 10 + aux;
        for (int pass13 = 0; pass13 < 2; pass13++) {
            aux = aux + pass13;
        }
        if (aux > 46) {
            aux = aux - aux / 5;
        }
        for (int pass15 = 0; pass15 < 4; pass15++) {
            seed = seed + pass15;
        }
        for (int pass16 = 0; pass16 < 3; pass16++) {
            seed = seed + pass16;
        }
        for (int pass17 = 0; pass17 < 2; pass17++) {
            aux = aux + pass17;
        }
        if (seed > 88) {
            seed = seed - seed / 5;
        }
        aux = aux % 9 + aux;
        for (int pass20 = 0; pass20 < 5; pass20++) {
            aux = aux + pass20;
        }
        if (acc > 60) {
            acc = acc - acc / 2;
        }
        for (int pass22 = 0; pass22 < 2; pass22++) {
            seed = seed + pass22;
        }
        seed = aux % 8 + seed;
        acc = aux % 3 + acc;
        for (int pass25 = 0; pass25 < 3; pass25++) {
            aux = aux + pass25;
        }
        acc = acc % 17 + acc;
        if (seed > 59) {
            seed = seed - seed / 5;
        }
        aux = aux + acc * 8;
        for (int pass29 = 0; pass29 < 5; pass29++) {
            aux = aux + pass29;
        }
        seed = seed + aux * 5;
        aux = aux + acc * 7;
        if (aux > 26) {
            seed = seed - aux / 5;
        }
        aux = aux + seed * 9;
        aux = aux % 8 + aux;
        for (int pass35 = 0; pass35 < 6; pass35++) {
            acc = acc + pass35;
        }
        return acc - aux;
    }
}
