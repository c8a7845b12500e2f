"""A battery of tricky-but-common Java shapes the parser must survive with
the right member structure (real corpora are full of these)."""

import pytest

from smellforge.javaparse import parse_unit

CASES = {
    "generics_wildcards": (
        """
package p;
import java.util.*;
public class G<T extends Comparable<? super T>> {
    private Map<String, ? extends List<T>> cache = new HashMap<>();
    public <R extends Number & Comparable<R>> R pick(List<? super R> xs, R fallback) {
        return fallback;
    }
}
""",
        {"G": (1, 1)},
    ),
    "ternary_and_casts": (
        """
package p;
public class T {
    Object pick(Object a, Object b, boolean c) {
        Object out = c ? (String) a : b;
        int n = (int) (long) 5L;
        return out instanceof String ? out : b;
    }
}
""",
        {"T": (1, 0)},
    ),
    "do_while_labels_switch": (
        """
package p;
public class C {
    int f(int n) {
        outer:
        do {
            switch (n) {
                case 1:
                case 2: n += 1; break;
                default: { n -= 1; }
            }
            if (n > 10) break outer;
        } while (n != 0);
        return n;
    }
}
""",
        {"C": (1, 0)},
    ),
    "anonymous_with_args_and_lambdas": (
        """
package p;
import java.util.function.Supplier;
public class A {
    Thread t = new Thread(() -> System.out.println("x"), "name");
    Supplier<String> s = new Supplier<String>() {
        public String get() { return "v"; }
    };
    Runnable r = () -> { int z = 1; z++; };
}
""",
        {"A": (0, 3), "A$1": (1, 0)},
    ),
    "varargs_and_enhanced_for": (
        """
package p;
public class V {
    static int sum(int first, int... rest) {
        int acc = first;
        for (int x : rest) acc += x;
        return acc;
    }
    void call() { sum(1, 2, 3, 4); }
}
""",
        {"V": (2, 0)},
    ),
    "interface_default_static": (
        """
package p;
public interface I {
    int BASE = 10;
    int get();
    default int doubled() { return get() * 2; }
    static I of() { return () -> BASE; }
}
""",
        {"I": (3, 1)},
    ),
    "try_with_resources_multicatch": (
        """
package p;
import java.io.*;
public class IOx {
    String read(File f) throws IOException, RuntimeException {
        try (BufferedReader r = new BufferedReader(new FileReader(f));
             StringWriter w = new StringWriter()) {
            return r.readLine();
        } catch (FileNotFoundException | SecurityException e) {
            throw new IOException(e);
        } finally {
            System.out.println("done");
        }
    }
}
""",
        {"IOx": (1, 0)},
    ),
    "annotations_everywhere": (
        """
package p;
import java.lang.annotation.*;
@Deprecated
@SuppressWarnings({"unchecked", "raw"})
public class Ann {
    @Deprecated private int old;
    @SafeVarargs
    @SuppressWarnings("x")
    final <T> void consume(@Deprecated T... items) { }
}
""",
        {"Ann": (1, 1)},
    ),
    "inner_enum_and_initializers": (
        """
package p;
public class Outer {
    static int COUNTER;
    static { COUNTER = 1; }
    { COUNTER += 1; }
    enum Mode { ON, OFF("x");
        private String tag;
        Mode() { }
        Mode(String t) { this.tag = t; }
    }
    Mode mode = Mode.ON;
}
""",
        {"Outer": (0, 2), "Outer$Mode": (2, 3)},
    ),
    "string_and_char_escapes": (
        """
package p;
public class S {
    String a = "quote \\" brace { paren ( semi ;";
    char c = '{';
    char nl = '\\n';
    String u = "\\u0041\\t";
}
""",
        {"S": (0, 4)},
    ),
    "stream_chains_and_method_refs": (
        """
package p;
import java.util.*;
import java.util.stream.*;
public class Ch {
    List<String> go(List<String> xs) {
        return xs.stream()
            .map(String::trim)
            .filter(s -> !s.isEmpty())
            .sorted(Comparator.comparing(String::length))
            .collect(Collectors.toList());
    }
}
""",
        {"Ch": (1, 0)},
    ),
    "multi_init_for_header": (
        """
package p;
public class FH {
    int f(int n) {
        for (int i = 0, j = n; i < j; i++, j--) {
            n += i > j ? i : j;
        }
        return n;
    }
}
""",
        {"FH": (1, 0)},
    ),
    "qualified_this_and_inner_new": (
        """
package p;
public class Host {
    int x;
    class Inner {
        int y() { return Host.this.x; }
    }
    Inner make() { return this.new Inner(); }
}
""",
        {"Host": (1, 1), "Host$Inner": (1, 0)},
    ),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_tricky_shapes_parse_with_expected_members(name):
    source, expected = CASES[name]
    unit = parse_unit(source, name)
    got = {
        c.qualified_name.split(".", 1)[-1]: (c.nom, c.noa)
        for c in unit.classes
    }
    assert got == expected
