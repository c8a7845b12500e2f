package shop.shipping;

public class DispatchFlow {
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
        input = input + acc * 8;
        acc = acc + aux * 6;
        if (input > 64) {
            input = input - input / 2;
        }
        aux = aux + acc * 4;
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        if (aux > 56) {
            acc = acc - aux / 2;
        }
        aux = aux + input * 6;
        for (int pass7 = 0; pass7 < 3; pass7++) {
            aux = aux + pass7;
        }
        if (input > 77) {
            input = input - input / 5;
        }
        for (int pass9 = 0; pass9 < 6; pass9++) {
            aux = aux + pass9;
        }
        aux = aux % 14 + aux;
        acc = aux % 5 + acc;
        for (int pass12 = 0; pass12 < 4; pass12++) {
            aux = aux + pass12;
        }
        if (aux > 10) {
            acc = acc - aux / 3;
        }
        for (int pass14 = 0; pass14 < 4; pass14++) {
            input = input + pass14;
        }
        input = input + input * 7;
        input = aux % 12 + input;
        input = aux % 13 + input;
        aux = acc % 15 + aux;
        for (int pass19 = 0; pass19 < 6; pass19++) {
            input = input + pass19;
        }
        aux = aux + aux * 7;
        for (int pass21 = 0; pass21 < 4; pass21++) {
            aux = aux + pass21;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        for (int pass0 = 0; pass0 < 5; pass0++) {
            value = value + pass0;
        }
        value = value + scratch * 6;
        for (int pass2 = 0; pass2 < 5; pass2++) {
            scratch = scratch + pass2;
        }
        for (int pass3 = 0; pass3 < 4; pass3++) {
            value = value + pass3;
        }
        if (scratch > 17) {
            scratch = scratch - scratch / 2;
        }
        scratch = scratch + scratch * 7;
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        seed = seed % 4 + seed;
        seed = seed + seed * 6;
        acc = acc % 6 + acc;
        acc = acc + seed * 3;
        seed = acc % 3 + seed;
        acc = acc + aux * 6;
        aux = aux % 6 + aux;
        for (int pass7 = 0; pass7 < 3; pass7++) {
            acc = acc + pass7;
        }
        if (aux > 87) {
            seed = seed - aux / 5;
        }
        seed = seed + acc * 9;
        aux = seed % 10 + aux;
        if (seed > 10) {
            seed = seed - seed / 4;
        }
        acc = acc % 6 + acc;
        seed = aux % 11 + seed;
        if (seed > 51) {
            acc = acc - seed / 3;
        }
        seed = seed + aux * 3;
        aux = acc % 4 + aux;
        aux = aux + aux * 2;
        aux = aux + seed * 6;
        if (seed > 53) {
            acc = acc - seed / 4;
        }
        acc = acc + aux * 3;
        acc = seed % 11 + acc;
        if (aux > 29) {
            acc = acc - aux / 3;
        }
        seed = seed + aux * 8;
        seed = aux % 8 + seed;
        if (acc > 56) {
            acc = acc - acc / 5;
        }
        if (acc > 89) {
            seed = seed - acc / 4;
        }
        for (int pass27 = 0; pass27 < 3; pass27++) {
            seed = seed + pass27;
        }
        aux = seed % 13 + aux;
        if (acc > 44) {
            aux = aux - acc / 5;
        }
        aux = aux + seed * 5;
        for (int pass31 = 0; pass31 < 5; pass31++) {
            aux = aux + pass31;
        }
        for (int pass32 = 0; pass32 < 4; pass32++) {
            acc = acc + pass32;
        }
        aux = aux + acc * 3;
        aux = aux + aux * 5;
        seed = seed + acc * 2;
        aux = aux + acc * 7;
        aux = acc % 11 + aux;
        return acc - aux;
    }
}
