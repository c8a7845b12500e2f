package shop.accounts;

public class SignupFlow {
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
        aux = input % 7 + aux;
        aux = aux + input * 4;
        aux = aux % 3 + aux;
        acc = acc + aux * 7;
        aux = aux + input * 2;
        acc = acc + acc * 2;
        if (input > 12) {
            aux = aux - input / 2;
        }
        aux = aux + acc * 3;
        if (aux > 86) {
            acc = acc - aux / 3;
        }
        if (aux > 14) {
            acc = acc - aux / 4;
        }
        if (aux > 14) {
            acc = acc - aux / 4;
        }
        input = input % 10 + input;
        input = input + input * 8;
        input = input + aux * 3;
        if (aux > 55) {
            aux = aux - aux / 2;
        }
        if (acc > 13) {
            acc = acc - acc / 3;
        }
        input = input + acc * 2;
        if (aux > 10) {
            acc = acc - aux / 2;
        }
        acc = aux % 6 + acc;
        acc = aux % 10 + acc;
        for (int pass20 = 0; pass20 < 3; pass20++) {
            acc = acc + pass20;
        }
        input = input + acc * 3;
        aux = acc % 3 + aux;
        input = input + input * 4;
        aux = input % 3 + aux;
        if (aux > 84) {
            aux = aux - aux / 3;
        }
        return acc + aux;
    }

    public void touchUp(int value) {
        int scratch = value;
        if (scratch > 35) {
            scratch = scratch - scratch / 5;
        }
        scratch = scratch % 13 + scratch;
        scratch = scratch + value * 7;
        scratch = scratch + scratch * 6;
        scratch = value % 10 + scratch;
        for (int pass5 = 0; pass5 < 6; pass5++) {
            value = value + pass5;
        }
        scratch = value % 9 + scratch;
        scratch = scratch + value * 8;
        state0 = scratch;
    }
}
