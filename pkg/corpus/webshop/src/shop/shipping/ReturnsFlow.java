package shop.shipping;

public class ReturnsFlow {
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
        for (int pass0 = 0; pass0 < 6; pass0++) {
            aux = aux + pass0;
        }
        if (input > 15) {
            input = input - input / 4;
        }
        input = input % 17 + input;
        aux = input % 3 + aux;
        for (int pass4 = 0; pass4 < 4; pass4++) {
            input = input + pass4;
        }
        for (int pass5 = 0; pass5 < 6; pass5++) {
            acc = acc + pass5;
        }
        for (int pass6 = 0; pass6 < 5; pass6++) {
            input = input + pass6;
        }
        input = input + acc * 8;
        aux = aux + input * 2;
        acc = aux % 9 + acc;
        for (int pass10 = 0; pass10 < 2; pass10++) {
            acc = acc + pass10;
        }
        if (aux > 64) {
            acc = acc - aux / 3;
        }
        for (int pass12 = 0; pass12 < 3; pass12++) {
            input = input + pass12;
        }
        aux = aux + input * 3;
        input = acc % 8 + input;
        if (acc > 35) {
            aux = aux - acc / 4;
        }
        aux = acc % 7 + aux;
        aux = aux % 6 + aux;
        aux = acc % 16 + aux;
        acc = aux % 7 + acc;
        if (aux > 52) {
            input = input - aux / 2;
        }
        for (int pass21 = 0; pass21 < 3; pass21++) {
            acc = acc + pass21;
        }
        if (acc > 38) {
            aux = aux - acc / 3;
        }
        input = aux % 10 + input;
        for (int pass24 = 0; pass24 < 4; pass24++) {
            aux = aux + pass24;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        for (int pass0 = 0; pass0 < 5; pass0++) {
            scratch = scratch + pass0;
        }
        scratch = value % 17 + scratch;
        value = value % 4 + value;
        scratch = scratch + value * 2;
        for (int pass4 = 0; pass4 < 6; pass4++) {
            scratch = scratch + pass4;
        }
        for (int pass5 = 0; pass5 < 6; pass5++) {
            value = value + pass5;
        }
        for (int pass6 = 0; pass6 < 3; pass6++) {
            value = value + pass6;
        }
        state0 = scratch;
    }
}
