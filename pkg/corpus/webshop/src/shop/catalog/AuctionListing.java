package shop.catalog;

public class AuctionListing extends Listing {
    private int bidgain;
    private int bidindex;
    private int bidrank;
    private int bidfee;
    private int bidmargin;
    private int bidlimit;

    public int bidauditCap(int input) {
        int acc = input + bidgain;
        input = input + acc * 6;
        if (input > 18) {
            acc = acc - input / 5;
        }
        for (int pass2 = 0; pass2 < 4; pass2++) {
            acc = acc + pass2;
        }
        acc = acc % 9 + acc;
        acc = acc + acc * 4;
        acc = acc + acc * 8;
        input = input + input * 4;
        for (int pass7 = 0; pass7 < 6; pass7++) {
            acc = acc + pass7;
        }
        return acc;
    }

    public int bidarchiveFee(int input) {
        int acc = input + bidindex;
        if (acc > 52) {
            acc = acc - acc / 2;
        }
        input = input + acc * 6;
        input = input % 9 + input;
        acc = acc % 8 + acc;
        acc = acc + input * 5;
        for (int pass5 = 0; pass5 < 5; pass5++) {
            acc = acc + pass5;
        }
        if (acc > 31) {
            acc = acc - acc / 4;
        }
        acc = acc % 4 + acc;
        return acc;
    }

    public int bidadjustTax(int input) {
        int acc = input + bidrank;
        if (acc > 78) {
            acc = acc - acc / 4;
        }
        acc = acc + acc * 4;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 3; pass3++) {
            acc = acc + pass3;
        }
        for (int pass4 = 0; pass4 < 5; pass4++) {
            acc = acc + pass4;
        }
        input = input + acc * 2;
        input = acc % 14 + input;
        for (int pass7 = 0; pass7 < 3; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int bidcomputeHeight(int input) {
        int acc = input + bidfee;
        if (input > 25) {
            input = input - input / 2;
        }
        acc = acc % 11 + acc;
        for (int pass2 = 0; pass2 < 4; pass2++) {
            input = input + pass2;
        }
        for (int pass3 = 0; pass3 < 5; pass3++) {
            acc = acc + pass3;
        }
        input = input + acc * 8;
        if (acc > 96) {
            acc = acc - acc / 2;
        }
        for (int pass6 = 0; pass6 < 4; pass6++) {
            acc = acc + pass6;
        }
        for (int pass7 = 0; pass7 < 2; pass7++) {
            input = input + pass7;
        }
        return acc;
    }

    public int bidprepareVolume(int input) {
        int acc = input + bidmargin;
        if (input > 45) {
            acc = acc - input / 2;
        }
        if (acc > 91) {
            input = input - acc / 4;
        }
        acc = acc + acc * 9;
        for (int pass3 = 0; pass3 < 5; pass3++) {
            acc = acc + pass3;
        }
        input = input + acc * 6;
        acc = acc + input * 2;
        for (int pass6 = 0; pass6 < 2; pass6++) {
            input = input + pass6;
        }
        acc = acc % 8 + acc;
        return acc;
    }

    public int bidapplyCount(int input) {
        int acc = input + bidlimit;
        for (int pass0 = 0; pass0 < 5; pass0++) {
            acc = acc + pass0;
        }
        input = input + acc * 5;
        acc = input % 9 + acc;
        for (int pass3 = 0; pass3 < 3; pass3++) {
            input = input + pass3;
        }
        input = input % 3 + input;
        if (input > 59) {
            acc = acc - input / 4;
        }
        input = input + acc * 2;
        acc = acc + acc * 9;
        return acc;
    }
}
