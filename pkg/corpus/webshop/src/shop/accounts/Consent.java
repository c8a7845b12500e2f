package shop.accounts;

public class Consent {
    private double quota;
    private double size;
    private double weight;
    private double depth;

    public double getQuota() {
        return quota;
    }

    public void setQuota(double value) {
        this.quota = value;
    }

    public double getSize() {
        return size;
    }

    public double getWeight() {
        return weight;
    }

    public void setWeight(double value) {
        this.weight = value;
    }

    public double getDepth() {
        return depth;
    }

    public void setDepth(double value) {
        this.depth = value;
    }
}
