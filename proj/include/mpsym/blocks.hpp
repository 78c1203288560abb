#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mpsym/partition.hpp"
#include "mpsym/poset.hpp"
#include "mpsym/rational.hpp"

namespace mpsym {

// Partition of all l-multipartitions of n into blocks. Items follow the
// canonical enumeration order; classes hold item indices in increasing
// order and are sorted by their minimal member.
struct BlockPartition {
    std::vector<Multipartition> items;
    std::vector<std::vector<int>> classes;

    int class_of(int item) const;
    std::string item_label(int item) const;
    std::string class_label(int cls) const;  // {item,item,...}
};

// one singleton block per multipartition (generic parameter behaviour)
BlockPartition cm_blocks_regular(int l, long long n);

// level 2 blocks at charge-like weight m and symbol size s: two
// multipartitions share a block exactly when their kappa sequences agree
BlockPartition cm_blocks_l2(long long n, const Charge& m, int s);

// blocks refined by the J-heart of tau applied to the transpose at integer
// charge s; J is a set of residues mod l
BlockPartition cm_blocks_jclass(int l, long long n, const Charge& s,
                                const std::set<int>& J);

// per-block values of f; every block must be constant (ConstancyViolation)
std::vector<Rat> afc_on_blocks(const BlockPartition& bp,
                               const std::function<Rat(const Multipartition&)>& f);

// The cyclic group C_e acts on l-multipartitions by rotating components in
// groups of p = l/e. A multipartition is stuttering when some nontrivial
// rotation fixes it; the stabilizer order divides e.
bool is_stuttering(const Multipartition& mp, int e);
int stabilizer_order(const Multipartition& mp, int e);
Multipartition rotate_components(const Multipartition& mp, int e);  // one generator step

// Irreducibles of the index-e subgroup are labeled by a rotation-orbit
// representative (lexicographically minimal) together with an index below
// the stabilizer order.
struct GlenLabel {
    Multipartition rep;
    int index = 0;
    std::string to_string() const;
    bool operator==(const GlenLabel& o) const { return rep == o.rep && index == o.index; }
};

std::vector<GlenLabel> irr_glen_labels(int l, int e, long long n);

// Blocks for the index-e subgroup obtained from rotation-stable blocks of
// the full group: orbits of blocks merge, and a singleton block on a
// stuttering multipartition splits into one flagged singleton per label.
struct GlenBlocks {
    std::vector<GlenLabel> items;
    std::vector<std::vector<int>> classes;
    std::vector<char> split;            // class arose by splitting a stuttering singleton
    std::vector<int> worbit_of_class;   // originating block-orbit id per class
    std::vector<std::vector<int>> worbits;  // block-orbit id -> member block indices

    std::string class_label(int cls) const;
};

GlenBlocks glen_blocks(int l, int e, long long n, const BlockPartition& wblocks);

// Order on the subgroup blocks carried over from an order on the full
// group's blocks (worder element i must correspond to wblocks.classes[i]):
// distinct classes compare through some pair of blocks in their orbits,
// while split siblings stay incomparable.
FinitePoset glen_block_order(int l, int e, long long n,
                             const BlockPartition& wblocks,
                             const FinitePoset& worder);

}  // namespace mpsym
