#include "mpsym/tau.hpp"

#include <algorithm>
#include <functional>

#include "mpsym/error.hpp"

namespace mpsym {

void check_charge(const Charge& s, int l) {
    if (static_cast<int>(s.size()) != l)
        fail("MalformedCharge", "expected " + std::to_string(l) + " components");
    Rat sum(0);
    for (const Rat& c : s) {
        if (!rat_is_integer(c * Rat(l)))
            fail("MalformedCharge", "component " + rat_str(c) + " not in (1/l)Z");
        sum += c;
    }
    if (sum != Rat(0)) fail("MalformedCharge", "components sum to " + rat_str(sum));
}

void check_charge_for_tau(const Charge& s, int l) {
    check_charge(s, l);
    std::vector<char> seen(static_cast<size_t>(l), 0);
    for (int i = 1; i <= l; ++i) {
        long long r = (rat_frac(s[static_cast<size_t>(i - 1)]).numerator() *
                           (l / rat_frac(s[static_cast<size_t>(i - 1)]).denominator()) +
                       i) % l;
        if (seen[static_cast<size_t>(r)])
            fail("MalformedCharge", "interleaved residues collide; charge is not in "
                                    "the orbit of an integer charge");
        seen[static_cast<size_t>(r)] = 1;
    }
}

bool is_integer_charge(const Charge& s) {
    return std::all_of(s.begin(), s.end(), [](const Rat& c) { return rat_is_integer(c); });
}

std::vector<Rat> beta_set(const Partition& p, const Rat& charge, int k) {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(k));
    for (long long j = 1; j <= k; ++j) {
        long long part = j <= height(p) ? p[static_cast<size_t>(j - 1)] : 0;
        out.push_back(Rat(part) + charge - Rat(j - 1));
    }
    return out;
}

Partition tau(const Charge& s, const Multipartition& lam) {
    int l = static_cast<int>(lam.size());
    check_charge_for_tau(s, l);

    // Component i turns pure arithmetic tail below l(s_i - h_i - 1) + i. Below
    // the minimum of those starts every integer appears exactly once, so the
    // truncation depth D is taken 2l under it: entries are kept per component
    // while their interleaved value stays >= D, which keeps all components
    // aligned by value rather than by entry count (charges shift the depths).
    long long depth = 0;
    for (int i = 1; i <= l; ++i) {
        Rat es = Rat(l) * (s[static_cast<size_t>(i - 1)] -
                           Rat(height(lam[static_cast<size_t>(i - 1)])) - Rat(1)) +
                 Rat(i);
        if (!rat_is_integer(es)) fail("InternalCutoff", "non-integer interleaved entry");
        if (i == 1 || es.numerator() < depth) depth = es.numerator();
    }
    depth -= 2 * l;

    std::vector<long long> merged;
    for (int i = 1; i <= l; ++i) {
        const Partition& comp = lam[static_cast<size_t>(i - 1)];
        const Rat& ci = s[static_cast<size_t>(i - 1)];
        for (long long j = 1;; ++j) {
            long long part = j <= height(comp) ? comp[static_cast<size_t>(j - 1)] : 0;
            Rat e = Rat(l) * (Rat(part) + ci - Rat(j - 1) - Rat(1)) + Rat(i);
            if (!rat_is_integer(e)) fail("InternalCutoff", "non-integer interleaved entry");
            if (e.numerator() < depth) break;
            merged.push_back(e.numerator());
        }
    }
    std::sort(merged.begin(), merged.end(), std::greater<long long>());
    for (size_t j = 1; j < merged.size(); ++j)
        if (merged[j] == merged[j - 1])
            fail("InternalCutoff", "interleaved entries collide");

    // certify: the tail of the merged sequence must already be the arithmetic
    // tail 1-j of a beta_0 set, and all read-off parts must be nonnegative
    size_t total = merged.size();
    if (total < 2 * static_cast<size_t>(l))
        fail("InternalCutoff", "merged sequence shorter than the certified tail");
    for (size_t j = total - 2 * static_cast<size_t>(l); j < total; ++j)
        if (merged[j] != 1 - static_cast<long long>(j + 1))
            fail("InternalCutoff", "merged tail not consecutive at cutoff");
    Partition rho;
    for (size_t j = 0; j < total; ++j) {
        long long part = merged[j] + static_cast<long long>(j);
        if (part < 0) fail("InternalCutoff", "negative part while reading off tau image");
        if (part > 0) rho.push_back(part);
    }
    // parts were produced in decreasing entry order, hence weakly decreasing
    return rho;
}

std::pair<Charge, Multipartition> tau_inverse(int l, const Partition& rho) {
    if (!is_partition(rho)) fail("MalformedCharge", "rho is not a partition");
    long long take = static_cast<long long>(l) * (height(rho) + 2);
    Charge s(static_cast<size_t>(l));
    Multipartition lam(static_cast<size_t>(l));
    std::vector<std::vector<long long>> cls(static_cast<size_t>(l));
    for (long long j = 1; j <= take; ++j) {
        long long part = j <= height(rho) ? rho[static_cast<size_t>(j - 1)] : 0;
        long long e = part - j + 1;
        long long r = ((e % l) + l) % l;            // residue class picks the component
        int i = r == 0 ? l : static_cast<int>(r);   // entries of T_i are = i mod l
        cls[static_cast<size_t>(i - 1)].push_back((e - i) / l + 1);
    }
    for (int i = 1; i <= l; ++i) {
        const auto& xs = cls[static_cast<size_t>(i - 1)];
        long long k = static_cast<long long>(xs.size());
        // the deepest materialized entry is in the pure tail, so it exposes s
        long long si = xs.back() + k - 1;
        s[static_cast<size_t>(i - 1)] = Rat(si);
        Partition& comp = lam[static_cast<size_t>(i - 1)];
        for (long long j = 1; j <= k; ++j) {
            long long part = xs[static_cast<size_t>(j - 1)] - si + j - 1;
            if (part < 0) fail("InternalCutoff", "negative part in tau_inverse read-off");
            if (part > 0) comp.push_back(part);
        }
        if (!is_partition(comp))
            fail("InternalCutoff", "tau_inverse produced a non-partition");
    }
    Rat sum(0);
    for (const Rat& c : s) sum += c;
    if (sum != Rat(0)) fail("InternalCutoff", "tau_inverse charge does not sum to 0");
    return {s, lam};
}

Partition ell_core(const Charge& s) {
    if (!is_integer_charge(s))
        fail("MalformedCharge", "l-cores are attached to integer charges");
    return tau(s, Multipartition(s.size()));
}

namespace {

// row r (1-based) of p is removable when shrinking it keeps a partition
bool removable(const Partition& p, size_t r) {
    if (r + 1 < p.size() && p[r] == p[r + 1]) return false;
    return p[r] >= 1;
}

}  // namespace

Partition j_heart(const Partition& rho, int l, const std::set<int>& J) {
    if (l < 1) fail("WrongLevel", "level must be positive");
    for (int j : J)
        if (j < 0 || j >= l) fail("WrongLevel", "residue outside 0..l-1");
    Partition p = rho;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t r = 0; r < p.size(); ++r) {
            if (!removable(p, r)) continue;
            long long res = ((p[r] - static_cast<long long>(r) - 1) % l + l) % l;
            if (!J.count(static_cast<int>(res))) continue;
            if (--p[r] == 0) p.erase(p.begin() + static_cast<long long>(r));
            changed = true;
            break;
        }
    }
    return p;
}

bool j_class_eq(const Partition& a, const Partition& b, int l, const std::set<int>& J) {
    return j_heart(a, l, J) == j_heart(b, l, J);
}

}  // namespace mpsym
