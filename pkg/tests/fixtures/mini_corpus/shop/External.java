package shop;

import java.util.ArrayList;
import java.util.List;

public class External {
    public List<String> makeList(String seed) {
        List<String> items = new ArrayList<String>();
        items.add(seed);
        items.add(seed.toUpperCase());
        return items;
    }
}
