package shop;

class Casing {
    int id;
}

class casing {
    int value;
}
