package shop.reports;

public class ArchiveFlow {
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
        acc = input % 8 + acc;
        acc = acc % 5 + acc;
        for (int pass2 = 0; pass2 < 6; pass2++) {
            aux = aux + pass2;
        }
        acc = acc + aux * 4;
        aux = aux + acc * 7;
        input = acc % 8 + input;
        for (int pass6 = 0; pass6 < 5; pass6++) {
            input = input + pass6;
        }
        for (int pass7 = 0; pass7 < 2; pass7++) {
            acc = acc + pass7;
        }
        if (input > 16) {
            input = input - input / 2;
        }
        acc = input % 4 + acc;
        for (int pass10 = 0; pass10 < 4; pass10++) {
            aux = aux + pass10;
        }
        if (aux > 99) {
            aux = aux - aux / 3;
        }
        if (acc > 16) {
            aux = aux - acc / 3;
        }
        for (int pass13 = 0; pass13 < 4; pass13++) {
            acc = acc + pass13;
        }
        if (input > 38) {
            acc = acc - input / 3;
        }
        if (input > 10) {
            aux = aux - input / 4;
        }
        input = input + input * 8;
        if (acc > 28) {
            input = input - acc / 5;
        }
        if (aux > 52) {
            aux = aux - aux / 4;
        }
        for (int pass19 = 0; pass19 < 4; pass19++) {
            input = input + pass19;
        }
        for (int pass20 = 0; pass20 < 4; pass20++) {
            aux = aux + pass20;
        }
        for (int pass21 = 0; pass21 < 4; pass21++) {
            acc = acc + pass21;
        }
        if (input > 87) {
            input = input - input / 3;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        scratch = scratch + value * 5;
        if (value > 98) {
            scratch = scratch - value / 5;
        }
        if (scratch > 67) {
            scratch = scratch - scratch / 4;
        }
        scratch = scratch + value * 7;
        value = value + value * 7;
        scratch = scratch % 9 + scratch;
        for (int pass6 = 0; pass6 < 3; pass6++) {
            scratch = scratch + pass6;
        }
        value = scratch % 8 + value;
        scratch = scratch + value * 9;
        state0 = scratch;
    }

    public int sprawl(int seed) {
        int acc = seed;
        int aux = 1;
        acc = acc + acc * 2;
        if (seed > 67) {
            aux = aux - seed / 5;
        }
        acc = acc % 7 + acc;
        if (aux > 73) {
            aux = aux - aux / 4;
        }
        acc = acc + aux * 6;
        acc = acc + acc * 6;
        seed = seed + seed * 9;
        acc = acc + aux * 6;
        if (seed > 31) {
            seed = seed - seed / 4;
        }
        if (acc > 19) {
            aux = aux - acc / 5;
        }
        aux = seed % 9 + aux;
        for (int pass11 = 0; pass11 < 3; pass11++) {
            aux = aux + pass11;
        }
        for (int pass12 = 0; pass12 < 6; pass12++) {
            aux = aux + pass12;
        }
        seed = seed + seed * 7;
        if (seed > 76) {
            seed = seed - seed / 3;
        }
        acc = acc + seed * 9;
        aux = aux + acc * 5;
        for (int pass17 = 0; pass17 < 5; pass17++) {
            acc = acc + pass17;
        }
        acc = acc + aux * 3;
        seed = aux % 17 + seed;
        for (int pass20 = 0; pass20 < 4; pass20++) {
            aux = aux + pass20;
        }
        seed = aux % 11 + seed;
        aux = acc % 11 + aux;
        seed = seed + seed * 9;
        aux = seed % 14 + aux;
        for (int pass25 = 0; pass25 < 3; pass25++) {
            acc = acc + pass25;
        }
        for (int pass26 = 0; pass26 < 6; pass26++) {
            acc = acc + pass26;
        }
        seed = aux % 3 + seed;
        if (acc > 66) {
            aux = aux - acc / 4;
        }
        seed = aux % 7 + seed;
        for (int pass30 = 0; pass30 < 5; pass30++) {
            acc = acc + pass30;
        }
        if (aux > 37) {
            seed = seed - aux / 3;
        }
        if (aux > 64) {
            aux = aux - aux / 5;
        }
        seed = seed + acc * 6;
        aux = aux + aux * 3;
        if (acc > 37) {
            seed = seed - acc / 2;
        }
        if (aux > 16) {
            seed = seed - aux / 4;
        }
        for (int pass37 = 0; pass37 < 6; pass37++) {
            aux = aux + pass37;
        }
        if (acc > 33) {
            aux = aux - acc / 2;
        }
        return acc - aux;
    }
}
