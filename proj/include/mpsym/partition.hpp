#pragma once

#include <string>
#include <vector>

#include "mpsym/rational.hpp"

namespace mpsym {

// A partition is a weakly decreasing sequence of positive integers; the empty
// sequence is the empty partition. A multipartition of level l is an l-tuple
// of partitions. Components are indexed 1..l in the mathematical convention;
// charge and m-parameter entries are indexed 0..l-1.
using Partition = std::vector<long long>;
using Multipartition = std::vector<Partition>;
using Charge = std::vector<Rat>;

enum class Verdict { Less, Greater, Equal, Incomparable };

const char* verdict_name(Verdict v);
Verdict verdict_flip(Verdict v);  // swaps Less and Greater

bool is_partition(const Partition& p);
long long weight(const Partition& p);
inline long long height(const Partition& p) { return static_cast<long long>(p.size()); }
long long total_weight(const Multipartition& lam);

// Dominance order, extended to weakly decreasing rational sequences: pad the
// shorter sequence with zeros; sequences with different total sums are
// Incomparable; otherwise compare prefix sums. Less means the first argument
// is strictly dominated by the second.
Verdict dominance_compare(const std::vector<Rat>& a, const std::vector<Rat>& b);
Verdict dominance_compare(const Partition& a, const Partition& b);

Partition transpose(const Partition& p);
Multipartition transpose_multi(const Multipartition& lam);
// bar: reverse component order and transpose each component
Multipartition bar_multi(const Multipartition& lam);
// plain component reversal; equals transpose_multi(bar_multi(.))
Multipartition rev_multi(const Multipartition& lam);

struct Permutation {
    std::vector<int> img;  // img[i-1] = w(i), a bijection of {1..l}

    static Permutation identity(int l);
    int level() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    bool is_identity() const;
    Permutation inverse() const;
    Permutation compose(const Permutation& rhs) const;  // (this ∘ rhs)(i) = this(rhs(i))
    bool operator==(const Permutation& o) const { return img == o.img; }
    std::string to_string() const;  // one-line images, e.g. "2,1"
};

std::vector<Permutation> all_permutations(int l);

// Place permutation actions: (w·x)_i = x_{w^{-1}(i)} (1-based components).
Multipartition act_sym(const Permutation& w, const Multipartition& lam);
std::vector<Rat> act_sym_q(const Permutation& w, const std::vector<Rat>& q);

// Twisted action on charges: s'_{i-1} = s_{w^{-1}(i)-1} + (w^{-1}(i) - i)/l.
Charge act_charge(const Permutation& w, const Charge& s);

std::vector<Partition> enumerate_partitions(long long n);
std::vector<Multipartition> enumerate_multipartitions(int l, long long n);

std::string partition_str(const Partition& p);          // "[3,2]"
std::string multipartition_str(const Multipartition& lam);  // "[[3,2],[]]"

}  // namespace mpsym
