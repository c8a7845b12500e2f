package shop.orders;

public class OrderFlow {
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
        acc = aux % 17 + acc;
        for (int pass1 = 0; pass1 < 4; pass1++) {
            acc = acc + pass1;
        }
        for (int pass2 = 0; pass2 < 5; pass2++) {
            input = input + pass2;
        }
        aux = aux + input * 7;
        acc = acc + input * 3;
        acc = acc + input * 3;
        for (int pass6 = 0; pass6 < 6; pass6++) {
            acc = acc + pass6;
        }
        for (int pass7 = 0; pass7 < 2; pass7++) {
            input = input + pass7;
        }
        if (aux > 55) {
            input = input - aux / 5;
        }
        if (aux > 63) {
            aux = aux - aux / 3;
        }
        acc = acc + acc * 8;
        if (aux > 12) {
            acc = acc - aux / 2;
        }
        input = aux % 9 + input;
        if (aux > 90) {
            aux = aux - aux / 2;
        }
        acc = acc + input * 6;
        for (int pass15 = 0; pass15 < 2; pass15++) {
            aux = aux + pass15;
        }
        if (input > 70) {
            acc = acc - input / 2;
        }
        if (acc > 61) {
            input = input - acc / 4;
        }
        for (int pass18 = 0; pass18 < 4; pass18++) {
            acc = acc + pass18;
        }
        for (int pass19 = 0; pass19 < 5; pass19++) {
            acc = acc + pass19;
        }
        aux = input % 17 + aux;
        for (int pass21 = 0; pass21 < 3; pass21++) {
            input = input + pass21;
        }
        input = acc % 5 + input;
        for (int pass23 = 0; pass23 < 6; pass23++) {
            aux = aux + pass23;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        if (value > 20) {
            scratch = scratch - value / 4;
        }
        if (value > 22) {
            value = value - value / 2;
        }
        scratch = scratch + value * 8;
        value = value + scratch * 3;
        for (int pass4 = 0; pass4 < 6; pass4++) {
            scratch = scratch + pass4;
        }
        value = value + value * 5;
        for (int pass6 = 0; pass6 < 6; pass6++) {
            scratch = scratch + pass6;
        }
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        if (aux > 59) {
            aux = aux - aux / 3;
        }
        seed = seed + seed * 9;
        if (aux > 76) {
            aux = aux - aux / 2;
        }
        if (acc > 30) {
            aux = aux - acc / 2;
        }
        acc = acc + seed * 7;
        for (int pass5 = 0; pass5 < 3; pass5++) {
            acc = acc + pass5;
        }
        if (seed > 26) {
            acc = acc - seed / 2;
        }
        aux = aux + aux * 3;
        for (int pass8 = 0; pass8 < 2; pass8++) {
            aux = aux + pass8;
        }
        aux = aux % 4 + aux;
        if (seed > 55) {
            seed = seed - seed / 5;
        }
        seed = seed + aux * 3;
        for (int pass12 = 0; pass12 < 4; pass12++) {
            acc = acc + pass12;
        }
        if (seed > 51) {
            acc = acc - seed / 5;
        }
        for (int pass14 = 0; pass14 < 4; pass14++) {
            seed = seed + pass14;
        }
        seed = seed % 9 + seed;
        if (aux > 69) {
            acc = acc - aux / 3;
        }
        for (int pass17 = 0; pass17 < 5; pass17++) {
            seed = seed + pass17;
        }
        if (seed > 29) {
            aux = aux - seed / 5;
        }
        if (seed > 65) {
            seed = seed - seed / 4;
        }
        for (int pass20 = 0; pass20 < 4; pass20++) {
            aux = aux + pass20;
        }
        if (aux > 79) {
            aux = aux - aux / 4;
        }
        if (acc > 81) {
            aux = aux - acc / 2;
        }
        aux = aux % 13 + aux;
        aux = aux + aux * 7;
        for (int pass25 = 0; pass25 < 2; pass25++) {
            seed = seed + pass25;
        }
        if (seed > 64) {
            aux = aux - seed / 4;
        }
        seed = seed + aux * 8;
        seed = seed + acc * 6;
        for (int pass29 = 0; pass29 < 3; pass29++) {
            seed = seed + pass29;
        }
        seed = aux % 16 + seed;
        for (int pass31 = 0; pass31 < 2; pass31++) {
            aux = aux + pass31;
        }
        acc = acc + acc * 6;
        if (aux > 68) {
            acc = acc - aux / 4;
        }
        return acc - aux;
    }
}
