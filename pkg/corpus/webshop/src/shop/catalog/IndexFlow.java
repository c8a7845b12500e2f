package shop.catalog;

public class IndexFlow {
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
        aux = aux + aux * 8;
        for (int pass1 = 0; pass1 < 4; pass1++) {
            aux = aux + pass1;
        }
        input = input + acc * 9;
        for (int pass3 = 0; pass3 < 2; pass3++) {
            input = input + pass3;
        }
        aux = aux + input * 2;
        if (acc > 18) {
            acc = acc - acc / 4;
        }
        for (int pass6 = 0; pass6 < 2; pass6++) {
            aux = aux + pass6;
        }
        if (input > 69) {
            input = input - input / 2;
        }
        aux = input % 4 + aux;
        acc = acc + acc * 3;
        for (int pass10 = 0; pass10 < 4; pass10++) {
            input = input + pass10;
        }
        aux = aux % 4 + aux;
        for (int pass12 = 0; pass12 < 5; pass12++) {
            aux = aux + pass12;
        }
        if (aux > 89) {
            input = input - aux / 3;
        }
        if (acc > 54) {
            acc = acc - acc / 4;
        }
        input = input + input * 4;
        input = input + acc * 6;
        for (int pass17 = 0; pass17 < 3; pass17++) {
            input = input + pass17;
        }
        if (acc > 38) {
            aux = aux - acc / 5;
        }
        if (input > 92) {
            acc = acc - input / 5;
        }
        input = input % 12 + input;
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        scratch = value % 11 + scratch;
        if (value > 44) {
            value = value - value / 5;
        }
        value = value + value * 7;
        scratch = value % 8 + scratch;
        value = value % 14 + value;
        if (scratch > 78) {
            value = value - scratch / 4;
        }
        value = value + value * 8;
        scratch = scratch + value * 7;
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        if (aux > 57) {
            acc = acc - aux / 5;
        }
        acc = aux % 12 + acc;
        if (seed > 63) {
            aux = aux - seed / 5;
        }
        seed = seed + seed * 6;
        if (seed > 19) {
            acc = acc - seed / 5;
        }
        for (int pass5 = 0; pass5 < 3; pass5++) {
            seed = seed + pass5;
        }
        acc = seed % 7 + acc;
        aux = aux % 9 + aux;
        seed = acc % 13 + seed;
        seed = seed + acc * 6;
        for (int pass10 = 0; pass10 < 2; pass10++) {
            seed = seed + pass10;
        }
        seed = seed + aux * 5;
        for (int pass12 = 0; pass12 < 2; pass12++) {
            seed = seed + pass12;
        }
        for (int pass13 = 0; pass13 < 5; pass13++) {
            aux = aux + pass13;
        }
        for (int pass14 = 0; pass14 < 3; pass14++) {
            acc = acc + pass14;
        }
        for (int pass15 = 0; pass15 < 4; pass15++) {
            seed = seed + pass15;
        }
        seed = seed + aux * 2;
        for (int pass17 = 0; pass17 < 5; pass17++) {
            seed = seed + pass17;
        }
        aux = aux + seed * 9;
        for (int pass19 = 0; pass19 < 5; pass19++) {
            acc = acc + pass19;
        }
        aux = aux + aux * 4;
        if (acc > 74) {
            acc = acc - acc / 4;
        }
        if (seed > 95) {
            aux = aux - seed / 4;
        }
        if (seed > 96) {
            acc = acc - seed / 4;
        }
        aux = seed % 11 + aux;
        aux = acc % 11 + aux;
        for (int pass26 = 0; pass26 < 6; pass26++) {
            seed = seed + pass26;
        }
        seed = seed % 15 + seed;
        acc = seed % 12 + acc;
        for (int pass29 = 0; pass29 < 4; pass29++) {
            aux = aux + pass29;
        }
        aux = aux % 9 + aux;
        for (int pass31 = 0; pass31 < 4; pass31++) {
            acc = acc + pass31;
        }
        if (aux > 95) {
            seed = seed - aux / 5;
        }
        return acc - aux;
    }
}
