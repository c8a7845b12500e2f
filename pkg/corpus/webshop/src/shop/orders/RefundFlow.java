package shop.orders;

public class RefundFlow {
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
        for (int pass0 = 0; pass0 < 2; pass0++) {
            input = input + pass0;
        }
        if (input > 78) {
            input = input - input / 2;
        }
        for (int pass2 = 0; pass2 < 3; pass2++) {
            acc = acc + pass2;
        }
        if (aux > 49) {
            acc = acc - aux / 2;
        }
        if (input > 23) {
            aux = aux - input / 2;
        }
        aux = aux + aux * 4;
        if (input > 70) {
            input = input - input / 4;
        }
        for (int pass7 = 0; pass7 < 6; pass7++) {
            aux = aux + pass7;
        }
        aux = aux % 17 + aux;
        aux = aux + aux * 9;
        acc = acc % 15 + acc;
        aux = aux % 6 + aux;
        aux = aux % 7 + aux;
        acc = acc + input * 8;
        for (int pass14 = 0; pass14 < 5; pass14++) {
            acc = acc + pass14;
        }
        for (int pass15 = 0; pass15 < 5; pass15++) {
            input = input + pass15;
        }
        for (int pass16 = 0; pass16 < 4; pass16++) {
            aux = aux + pass16;
        }
        if (acc > 42) {
            acc = acc - acc / 5;
        }
        if (input > 13) {
            acc = acc - input / 5;
        }
        acc = acc % 11 + acc;
        if (input > 44) {
            acc = acc - input / 5;
        }
        for (int pass21 = 0; pass21 < 4; pass21++) {
            acc = acc + pass21;
        }
        if (input > 29) {
            aux = aux - input / 3;
        }
        if (input > 94) {
            acc = acc - input / 2;
        }
        for (int pass24 = 0; pass24 < 4; pass24++) {
            input = input + pass24;
        }
        for (int pass25 = 0; pass25 < 6; pass25++) {
            acc = acc + pass25;
        }
        if (input > 68) {
            aux = aux - input / 3;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        if (scratch > 97) {
            scratch = scratch - scratch / 3;
        }
        value = value + value * 6;
        scratch = scratch + value * 9;
        for (int pass3 = 0; pass3 < 3; pass3++) {
            value = value + pass3;
        }
        scratch = scratch + value * 2;
        for (int pass5 = 0; pass5 < 4; pass5++) {
            scratch = scratch + pass5;
        }
        if (scratch > 21) {
            scratch = scratch - scratch / 5;
        }
        if (value > 40) {
            scratch = scratch - value / 3;
        }
        state0 = scratch;
    }
}
