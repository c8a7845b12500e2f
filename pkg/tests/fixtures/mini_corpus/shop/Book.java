package shop;

public class Book extends Product {
    Price price;
    private int stock;

    public int discount(Campaign campaign) {
        int base = price.amount + price.amount;
        int rate = campaign.getRate();
        return base * rate / 100;
    }

    public int shelfValue() {
        return stock * price.getAmount();
    }

    public String describeFully() {
        return getTitle() + basePrice;
    }
}
