package shop.accounts;

public class GreetingDesk {
    private Profile profile;
    private int offset;
    private int volume;
    private int volumeMark;

    public int blend(int seed) {
        int acc = seed;
        acc = acc + offset;
        acc = acc + (int) profile.getRank();
        acc = acc + (int) profile.getLevel();
        acc = acc + (int) profile.getRank();
        acc = acc + (int) profile.getLevel();
        acc = acc + (int) profile.getRank();
        acc = acc + (int) profile.getLevel();
        acc = acc + (int) profile.getRank();
        return acc;
    }

    public int quiet(int seed) {
        return seed + offset;
    }
}
