#include "mpsym/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mpsym/error.hpp"

namespace mpsym {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Less: return "Less";
        case Verdict::Greater: return "Greater";
        case Verdict::Equal: return "Equal";
        case Verdict::Incomparable: return "Incomparable";
    }
    return "?";
}

Verdict verdict_flip(Verdict v) {
    if (v == Verdict::Less) return Verdict::Greater;
    if (v == Verdict::Greater) return Verdict::Less;
    return v;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

long long weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0LL);
}

long long total_weight(const Multipartition& lam) {
    long long n = 0;
    for (const auto& c : lam) n += weight(c);
    return n;
}

namespace {

// shared prefix-sum walk; entries beyond each sequence's length count as zero
template <class T>
Verdict dominance_core(const std::vector<T>& a, const std::vector<T>& b) {
    size_t len = std::max(a.size(), b.size());
    T pa{}, pb{};
    bool a_below = false, b_below = false;  // some strict prefix inequality seen
    bool equal = true;
    for (size_t k = 0; k < len; ++k) {
        if (k < a.size()) pa += a[k];
        if (k < b.size()) pb += b[k];
        if (pa < pb) { a_below = true; equal = false; }
        if (pb < pa) { b_below = true; equal = false; }
    }
    if (pa != pb) return Verdict::Incomparable;  // different total sums
    if (equal) return Verdict::Equal;
    if (a_below && b_below) return Verdict::Incomparable;
    return a_below ? Verdict::Less : Verdict::Greater;
}

}  // namespace

Verdict dominance_compare(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return dominance_core(a, b);
}

Verdict dominance_compare(const Partition& a, const Partition& b) {
    return dominance_core(a, b);
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    t.resize(static_cast<size_t>(p[0]));
    for (long long c = 1; c <= p[0]; ++c) {
        long long rows = 0;
        for (long long part : p) {
            if (part >= c) ++rows;
            else break;
        }
        t[static_cast<size_t>(c - 1)] = rows;
    }
    return t;
}

Multipartition transpose_multi(const Multipartition& lam) {
    Multipartition out(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) out[i] = transpose(lam[i]);
    return out;
}

Multipartition bar_multi(const Multipartition& lam) {
    Multipartition out(lam.size());
    for (size_t i = 0; i < lam.size(); ++i)
        out[i] = transpose(lam[lam.size() - 1 - i]);
    return out;
}

Multipartition rev_multi(const Multipartition& lam) {
    return Multipartition(lam.rbegin(), lam.rend());
}

Permutation Permutation::identity(int l) {
    Permutation w;
    w.img.resize(static_cast<size_t>(l));
    std::iota(w.img.begin(), w.img.end(), 1);
    return w;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= level(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation w;
    w.img.resize(img.size());
    for (int i = 1; i <= level(); ++i) w.img[static_cast<size_t>((*this)(i) - 1)] = i;
    return w;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    Permutation w;
    w.img.resize(img.size());
    for (int i = 1; i <= level(); ++i) w.img[static_cast<size_t>(i - 1)] = (*this)(rhs(i));
    return w;
}

std::string Permutation::to_string() const {
    std::string s;
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(img[i]);
    }
    return s;
}

std::vector<Permutation> all_permutations(int l) {
    std::vector<int> img(static_cast<size_t>(l));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{img});
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Multipartition act_sym(const Permutation& w, const Multipartition& lam) {
    Permutation inv = w.inverse();
    Multipartition out(lam.size());
    for (int i = 1; i <= w.level(); ++i)
        out[static_cast<size_t>(i - 1)] = lam[static_cast<size_t>(inv(i) - 1)];
    return out;
}

std::vector<Rat> act_sym_q(const Permutation& w, const std::vector<Rat>& q) {
    Permutation inv = w.inverse();
    std::vector<Rat> out(q.size());
    for (int i = 1; i <= w.level(); ++i)
        out[static_cast<size_t>(i - 1)] = q[static_cast<size_t>(inv(i) - 1)];
    return out;
}

Charge act_charge(const Permutation& w, const Charge& s) {
    int l = w.level();
    if (static_cast<int>(s.size()) != l)
        fail("MalformedCharge", "charge length does not match permutation level");
    Permutation inv = w.inverse();
    Charge out(s.size());
    for (int i = 1; i <= l; ++i)
        out[static_cast<size_t>(i - 1)] =
            s[static_cast<size_t>(inv(i) - 1)] + Rat(inv(i) - i, l);
    return out;
}

namespace {

void gen_partitions(long long n, long long maxpart, Partition& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long long n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int l, long long n) {
    static std::map<long long, std::vector<Partition>> cache;
    std::vector<const std::vector<Partition>*> table(static_cast<size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, enumerate_partitions(k)).first;
        table[static_cast<size_t>(k)] = &it->second;
    }
    std::vector<Multipartition> out;
    Multipartition cur(static_cast<size_t>(l));
    // walk compositions of n into l parts, lexicographically
    auto rec = [&](auto&& self, int idx, long long rest) -> void {
        if (idx == l - 1) {
            for (const auto& p : *table[static_cast<size_t>(rest)]) {
                cur[static_cast<size_t>(idx)] = p;
                out.push_back(cur);
            }
            return;
        }
        for (long long k = 0; k <= rest; ++k) {
            for (const auto& p : *table[static_cast<size_t>(k)]) {
                cur[static_cast<size_t>(idx)] = p;
                self(self, idx + 1, rest - k);
            }
        }
    };
    if (l == 0) return out;
    rec(rec, 0, n);
    return out;
}

std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

std::string multipartition_str(const Multipartition& lam) {
    std::string s = "[";
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i) s += ',';
        s += partition_str(lam[i]);
    }
    return s + "]";
}

}  // namespace mpsym
