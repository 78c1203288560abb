#include "mpsym/symbols.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mpsym/error.hpp"
#include "mpsym/rational.hpp"

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

// N as the literal double sum l * sum_i sum_{j=0}^{[k_i]} (k_i - j)
static Rat n_double_sum(int l, const std::vector<Rat>& kap) {
    Rat total(0);
    for (const Rat& k : kap)
        for (long long j = 0; j <= rat_floor(k); ++j) total += k - Rat(j);
    return Rat(l) * total;
}

int main() {
    const Multipartition lam{{}, {3, 2}};
    const Multipartition mu{{2, 2, 1}, {}};
    const std::vector<Rat> m_half{Rat(1, 2), Rat(0)};
    const std::vector<Rat> m_nine{Rat(9, 10), Rat(0)};
    const std::vector<Rat> m_one{Rat(1), Rat(0)};

    // published symbol of (-;32) at m = (1/2,0), size 4
    {
        Symbol b = shifted_symbol(lam, m_half, 4);
        check(b.rows.size() == 2, "symbol has l rows");
        check(b.rows[0] == std::vector<Rat>({Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(7, 2)}),
              "symbol row 0");
        check(b.rows[1] == std::vector<Rat>({Rat(0), Rat(1), Rat(4), Rat(6)}), "symbol row 1");
        check(b.m == m_half && b.s == 4 && b.source == lam, "symbol metadata");
    }

    // hc and the least admissible size
    check(hc_row({3, 2}, Rat(0)) == Rat(2), "hc_row");
    check(hc_max(lam, m_half) == Rat(2), "hc_max");
    check(min_size(lam, m_half) == 3, "min_size lam");
    check(min_size({{}, {}}, m_half) == 1, "min_size empty");
    check(min_size(mu, m_one) == 3, "min_size mu");
    check(throws_named([&] { shifted_symbol(lam, m_half, 2); }, "SizeTooSmall"),
          "size below hc+1 rejected");
    check(throws_named([&] { kappa(lam, m_half, 2); }, "SizeTooSmall"),
          "kappa checks the size too");

    // the six published kappa sequences at s = 4 and their verdicts
    {
        auto kstr = [](const std::vector<Rat>& k) { return rat_seq_str(k); };
        check(kstr(kappa(lam, m_half, 4)) == "6,4,7/2,5/2,3/2,1,1/2,0", "kappa lam (1/2,0)");
        check(kstr(kappa(mu, m_half, 4)) == "11/2,9/2,3,5/2,2,1,1/2,0", "kappa mu (1/2,0)");
        check(kstr(kappa(lam, m_nine, 4)) == "6,4,39/10,29/10,19/10,1,9/10,0",
              "kappa lam (9/10,0)");
        check(kstr(kappa(mu, m_nine, 4)) == "59/10,49/10,3,29/10,2,1,9/10,0",
              "kappa mu (9/10,0)");
        check(kstr(kappa(lam, m_one, 4)) == "6,4,4,3,2,1,1,0,0", "kappa lam (1,0)");
        check(kstr(kappa(mu, m_one, 4)) == "6,5,3,3,2,1,1,0,0", "kappa mu (1,0)");
        check(kappa_compare(lam, mu, m_half, 4) == Verdict::Greater, "verdict at (1/2,0)");
        check(kappa_compare(lam, mu, m_nine, 4) == Verdict::Incomparable, "verdict at (9/10,0)");
        check(kappa_compare(lam, mu, m_one, 4) == Verdict::Less, "verdict at (1,0)");
        check(kappa_compare(mu, lam, m_one, 4) == Verdict::Greater, "verdict flips");
        check(kappa_compare(lam, lam, m_one, 4) == Verdict::Equal, "self compare Equal");
    }

    // published N values at s = 4
    check(n_value(lam, m_one, 4) == Rat(104), "N lam (1,0)");
    check(n_value(mu, m_one, 4) == Rat(106), "N mu (1,0)");
    check(n_value(lam, m_nine, 4) == Rat(102), "N lam (9/10,0)");
    check(n_value(mu, m_nine, 4) == Rat(103), "N mu (9/10,0)");

    // structural laws over a small grid: rows increase, fractional parts match
    // the m entry, row count is s + [m^i], kappa is the sorted merge, and the
    // closed-form N equals the double sum
    {
        std::vector<std::vector<Rat>> ms{{Rat(0), Rat(0)},
                                         {Rat(1), Rat(0)},
                                         {Rat(1, 2), Rat(0)},
                                         {Rat(9, 10), Rat(0)},
                                         {Rat(2), Rat(1)},
                                         {Rat(1, 3), Rat(0), Rat(0)}};
        for (const std::vector<Rat>& m : ms) {
            int l = (int)m.size();
            for (long long n = 0; n <= 3; ++n)
                for (const Multipartition& mp : enumerate_multipartitions(l, n)) {
                    int s0 = min_size(mp, m);
                    for (int s = s0; s <= s0 + 2; ++s) {
                        Symbol b = shifted_symbol(mp, m, s);
                        std::vector<Rat> merged;
                        for (int i = 0; i < l; ++i) {
                            const std::vector<Rat>& row = b.rows[(size_t)i];
                            check((long long)row.size() == s + rat_floor(m[(size_t)i]),
                                  "row length s + [m^i]");
                            check(std::is_sorted(row.begin(), row.end()), "row increasing");
                            for (const Rat& x : row)
                                check(rat_frac(x) == rat_frac(m[(size_t)i]),
                                      "row fractional part");
                            merged.insert(merged.end(), row.begin(), row.end());
                        }
                        std::sort(merged.begin(), merged.end(), std::greater<Rat>());
                        std::vector<Rat> kap = kappa(mp, m, s);
                        check(merged == kap, "kappa is merged rows");
                        check(n_value(mp, m, s) == n_double_sum(l, kap), "N double sum oracle");
                        check(n_of_kappa(l, kap) == n_value(mp, m, s), "n_of_kappa agrees");
                    }
                }
        }
    }

    check(throws_named([] { n_of_kappa(2, {Rat(1), Rat(-1, 2)}); }, "NegativeEntry"),
          "negative kappa entry rejected");

    if (fails == 0) std::cout << "test_symbols: all checks passed\n";
    return fails == 0 ? 0 : 1;
}
