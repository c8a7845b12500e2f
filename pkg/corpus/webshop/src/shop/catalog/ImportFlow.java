package shop.catalog;

public class ImportFlow {
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
        if (acc > 15) {
            aux = aux - acc / 3;
        }
        if (input > 33) {
            aux = aux - input / 2;
        }
        input = input % 9 + input;
        if (input > 88) {
            aux = aux - input / 5;
        }
        acc = acc + acc * 2;
        input = input % 9 + input;
        input = input + acc * 4;
        if (input > 11) {
            acc = acc - input / 5;
        }
        acc = acc % 12 + acc;
        for (int pass9 = 0; pass9 < 4; pass9++) {
            acc = acc + pass9;
        }
        if (acc > 16) {
            aux = aux - acc / 5;
        }
        for (int pass11 = 0; pass11 < 4; pass11++) {
            input = input + pass11;
        }
        acc = acc % 15 + acc;
        aux = aux % 17 + aux;
        if (aux > 31) {
            aux = aux - aux / 3;
        }
        aux = acc % 17 + aux;
        if (aux > 20) {
            aux = aux - aux / 4;
        }
        for (int pass17 = 0; pass17 < 3; pass17++) {
            acc = acc + pass17;
        }
        aux = aux % 13 + aux;
        input = input % 10 + input;
        for (int pass20 = 0; pass20 < 3; pass20++) {
            acc = acc + pass20;
        }
        acc = acc + input * 5;
        acc = acc + acc * 4;
        aux = input % 11 + aux;
        if (aux > 31) {
            input = input - aux / 5;
        }
        if (acc > 25) {
            acc = acc - acc / 3;
        }
        aux = input % 4 + aux;
        aux = aux + input * 4;
        for (int pass28 = 0; pass28 < 3; pass28++) {
            input = input + pass28;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        scratch = scratch % 7 + scratch;
        value = scratch % 8 + value;
        scratch = value % 4 + scratch;
        if (value > 47) {
            value = value - value / 4;
        }
        scratch = scratch + value * 8;
        value = value + value * 3;
        for (int pass6 = 0; pass6 < 6; pass6++) {
            scratch = scratch + pass6;
        }
        state0 = scratch;
    }
}
