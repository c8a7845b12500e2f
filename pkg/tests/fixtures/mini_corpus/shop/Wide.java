package shop;

public class Wide {
    public int plain(int a) {
        int b = a + 1;
        return b + 2;
    }

    public int manyParams(int a, int b, int c, int d, int e) {
        return a + b + c + d + e;
    }

    public int deepNest(int n) {
        int acc = 0;
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                for (int k = 0; k < n; k++) {
                    for (int m = 0; m < n; m++) {
                        acc = acc + 1;
                    }
                }
            }
        }
        return acc;
    }
}
