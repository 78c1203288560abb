#include "mpsym/symbols.hpp"

#include <algorithm>
#include <functional>

#include "mpsym/error.hpp"

namespace mpsym {

Rat hc_row(const Partition& comp, const Rat& mi) {
    return Rat(height(comp)) - mi;
}

Rat hc_max(const Multipartition& lam, const std::vector<Rat>& m) {
    if (lam.size() != m.size())
        fail("WrongLevel", "multipartition level does not match m length");
    Rat best = hc_row(lam[0], m[0]);
    for (size_t i = 1; i < lam.size(); ++i) best = std::max(best, hc_row(lam[i], m[i]));
    return best;
}

int min_size(const Multipartition& lam, const std::vector<Rat>& m) {
    Rat bound = hc_max(lam, m) + Rat(1);
    long long s = rat_floor(bound);
    if (Rat(s) < bound) ++s;  // ceiling
    if (s < 1) s = 1;         // symbol sizes are positive by convention
    return static_cast<int>(s);
}

Symbol shifted_symbol(const Multipartition& lam, const std::vector<Rat>& m, int s) {
    if (lam.size() != m.size())
        fail("WrongLevel", "multipartition level does not match m length");
    if (s < 1) fail("SizeTooSmall", "symbol size must be a positive integer");
    Rat hc = hc_max(lam, m);
    if (Rat(s) < hc + Rat(1))
        fail("SizeTooSmall", "size " + std::to_string(s) + " < hc + 1 = " +
                                 rat_str(hc + Rat(1)));
    Symbol sym;
    sym.m = m;
    sym.s = s;
    sym.source = lam;
    sym.rows.resize(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) {
        const Partition& comp = lam[i];
        long long h = height(comp);
        Rat t = Rat(s) - hc_row(comp, m[i]);
        // beta^i, read with the smallest entry first
        std::vector<Rat> beta(static_cast<size_t>(h));
        for (long long j = h; j >= 1; --j)
            beta[static_cast<size_t>(h - j)] = Rat(comp[static_cast<size_t>(j - 1)] - j + h);
        std::vector<Rat>& row = sym.rows[i];
        long long shift = rat_floor(t);
        if (shift < 0) fail("SizeTooSmall", "negative row shift");
        Rat frac = t - Rat(shift);
        if (shift == 0) {
            row = beta;  // 0 <= t < 1 leaves beta unchanged
        } else {
            row.reserve(beta.size() + static_cast<size_t>(shift));
            for (long long k = 0; k < shift; ++k) row.push_back(frac + Rat(k));
            for (const Rat& b : beta) row.push_back(b + t);
        }
    }
    return sym;
}

std::vector<Rat> kappa(const Multipartition& lam, const std::vector<Rat>& m, int s) {
    Symbol sym = shifted_symbol(lam, m, s);
    std::vector<Rat> merged;
    for (const auto& row : sym.rows) merged.insert(merged.end(), row.begin(), row.end());
    std::sort(merged.begin(), merged.end(), std::greater<Rat>());
    return merged;
}

Rat n_of_kappa(int l, const std::vector<Rat>& kap) {
    Rat total(0);
    for (const Rat& k : kap) {
        if (k < Rat(0)) fail("NegativeEntry", "kappa entry " + rat_str(k) + " < 0");
        Rat f(rat_floor(k));
        total += (f + Rat(1)) * (Rat(2) * k - f) / Rat(2);
    }
    return Rat(l) * total;
}

Rat n_value(const Multipartition& lam, const std::vector<Rat>& m, int s) {
    return n_of_kappa(static_cast<int>(lam.size()), kappa(lam, m, s));
}

Verdict kappa_compare(const Multipartition& lam, const Multipartition& mu,
                      const std::vector<Rat>& m, int s) {
    return dominance_compare(kappa(lam, m, s), kappa(mu, m, s));
}

}  // namespace mpsym
