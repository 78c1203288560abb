#include "mpsym/afunction.hpp"

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mpsym/error.hpp"
#include "mpsym/symbols.hpp"

using namespace mpsym;

static int fails = 0;

static void check(bool ok, const std::string& what) {
    if (!ok) {
        ++fails;
        std::cerr << "FAIL: " << what << "\n";
    }
}

static bool throws_named(const std::function<void()>& f, const std::string& name) {
    try {
        f();
    } catch (const domain_error& e) {
        return e.name() == name;
    } catch (...) {
        return false;
    }
    return false;
}

// level 1 closed form: a(lam) = r * sum_i (i-1) lam_i for positive r
static Rat level1_oracle(const Partition& p, const Rat& r) {
    Rat total(0);
    for (size_t i = 0; i < p.size(); ++i) total += Rat((long long)i) * Rat(p[i]);
    return r * total;
}

int main() {
    const Multipartition lam{{}, {3, 2}};
    const Multipartition mu{{2, 2, 1}, {}};

    // published values at r = 1
    check(a_value(lam, {{Rat(1, 2), Rat(0)}, Rat(1)}) == Rat(65, 2), "a lam (1/2,0)");
    check(a_value(mu, {{Rat(1, 2), Rat(0)}, Rat(1)}) == Rat(34), "a mu (1/2,0)");
    check(a_value(lam, {{Rat(1), Rat(0)}, Rat(1)}) == Rat(40), "a lam (1,0)");
    check(a_value(mu, {{Rat(1), Rat(0)}, Rat(1)}) == Rat(39), "a mu (1,0)");

    // level 1 reduces to the classical weighted row sum, for both signs of r
    for (long long n = 0; n <= 8; ++n)
        for (const Partition& p : enumerate_partitions(n))
            for (const Rat& c : {Rat(0), Rat(1), Rat(1, 2)})
                for (const Rat& r : {Rat(1), Rat(2), Rat(1, 2)}) {
                    check(a_value({p}, {{c}, r}) == level1_oracle(p, r), "level 1 oracle");
                    check(a_value({p}, {{c}, -r}) == level1_oracle(transpose(p), r),
                          "level 1 oracle, r < 0");
                }

    // n = 1 at level 2: the nontrivial value is r times the m gap
    {
        const Multipartition first{{1}, {}};
        const Multipartition second{{}, {1}};
        std::vector<std::vector<Rat>> ms{{Rat(1), Rat(0)},
                                         {Rat(2), Rat(0)},
                                         {Rat(1, 2), Rat(0)},
                                         {Rat(0), Rat(0)},
                                         {Rat(0), Rat(1)}};
        for (const std::vector<Rat>& m : ms)
            for (const Rat& r : {Rat(1), Rat(2), Rat(1, 2)}) {
                Rat gap = m[0] - m[1];
                Rat lo = gap < Rat(0) ? -gap : Rat(0);
                Rat hi = gap > Rat(0) ? gap : Rat(0);
                check(a_value(first, {m, r}) == r * lo, "a on ((1);-)");
                check(a_value(second, {m, r}) == r * hi, "a on (-;(1))");
            }
    }

    // linear in r, and the transpose law defines the negative side
    for (const Multipartition& x : enumerate_multipartitions(2, 3)) {
        AContext one{{Rat(1), Rat(0)}, Rat(1)};
        AContext two{{Rat(1), Rat(0)}, Rat(2)};
        check(a_value(x, two) == Rat(2) * a_value(x, one), "a linear in r");
        AContext neg{{Rat(1), Rat(0)}, Rat(-1)};
        AContext flipped{{Rat(-1), Rat(0)}, Rat(1)};
        check(a_value(x, neg) == a_value(transpose_multi(x), flipped), "transpose law");
    }

    check(throws_named([&] { a_value(lam, {{Rat(1), Rat(0)}, Rat(0)}); }, "ZeroR"),
          "zero scale rejected");

    // F differences do not depend on the symbol size
    {
        std::vector<Rat> m{Rat(1), Rat(0)};
        int s = 4;
        Rat d1 = f_weight(lam, m, s) - f_weight(mu, m, s);
        Rat d2 = f_weight(lam, m, s + 1) - f_weight(mu, m, s + 1);
        Rat d3 = f_weight(lam, m, s + 3) - f_weight(mu, m, s + 3);
        check(d1 == d2 && d2 == d3, "F difference size independent");
        check(d1 == Rat(1), "a gap at (1,0) comes from F");
    }

    // kappa dominance reverses the a order at r > 0 (published pair, then a sweep)
    {
        check(kappa_compare(lam, mu, {Rat(1), Rat(0)}, 4) == Verdict::Less &&
                  a_value(lam, {{Rat(1), Rat(0)}, Rat(1)}) >
                      a_value(mu, {{Rat(1), Rat(0)}, Rat(1)}),
              "dominated pair has the larger a");
        std::vector<Rat> m{Rat(1), Rat(0)};
        AContext ctx{m, Rat(1)};
        std::vector<Multipartition> ground = enumerate_multipartitions(2, 2);
        for (const Multipartition& x : ground)
            for (const Multipartition& y : ground) {
                int s = std::max(min_size(x, m), min_size(y, m));
                if (kappa_compare(x, y, m, s) == Verdict::Less)
                    check(a_value(x, ctx) > a_value(y, ctx), "kappa Less means a larger");
            }
    }

    // c order through N at a fixed size
    {
        AContext ctx{{Rat(1), Rat(0)}, Rat(1)};
        check(c_compare(lam, mu, ctx, 4) == Verdict::Less, "c order at (1,0)");
        AContext neg{{Rat(1), Rat(0)}, Rat(-1)};
        check(c_compare(lam, mu, neg, 4) == Verdict::Greater, "c order flips with r");
        check(c_compare(lam, lam, ctx, 4) == Verdict::Equal, "c self Equal");
        check(throws_named([&] { c_compare(lam, mu, {{Rat(1), Rat(0)}, Rat(0)}, 4); },
                           "ZeroR"),
              "c needs nonzero r");
    }

    if (fails == 0) std::cout << "test_afunction: all checks passed\n";
    return fails == 0 ? 0 : 1;
}
