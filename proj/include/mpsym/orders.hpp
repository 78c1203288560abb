#pragma once

#include <vector>

#include "mpsym/blocks.hpp"
#include "mpsym/params.hpp"
#include "mpsym/partition.hpp"
#include "mpsym/poset.hpp"
#include "mpsym/tau.hpp"

namespace mpsym {

// Combinatorial order attached to an alcove: multipartitions are compared
// through dominance of bead-set partitions. For a positive alcove the
// multipartition is transposed componentwise before acting and reading off;
// for a negative alcove the components are reversed instead. Equality of
// the images certifies equality of the inputs (InternalCutoff otherwise).
Verdict comb_order(const Alcove& a, const Multipartition& lam, const Multipartition& mu);

// image partition used by comb_order, exposed for caching and tests
Partition comb_image(const Alcove& a, const Multipartition& lam);

// level 2 only: classify theta and compare in the resulting alcove's order;
// OnWall when theta lies on a wall or is degenerate
Verdict comb_order_theta_l2(const ParamTheta& theta, const Multipartition& lam,
                            const Multipartition& mu);

// reflexive-transitive preorder generated by the orders of several alcoves:
// true when a chain lam = x0, x1, ..., xk = mu exists with each step weakly
// increasing in at least one of the given alcove orders
bool wall_preorder(const std::vector<Alcove>& adjacent, const Multipartition& lam,
                   const Multipartition& mu);

// the same preorder materialized over all l-multipartitions of n; the
// relation is reflexive and transitive but usually not antisymmetric
FinitePoset wall_preorder_poset(const std::vector<Alcove>& adjacent, int l, long long n);

// full order poset of one alcove over all l-multipartitions of n
FinitePoset order_poset(const Alcove& a, int l, long long n);

// order on blocks induced by the preorder of adjacent alcoves: a block is
// below another when some member is below some member, then closed up
FinitePoset block_order(const std::vector<Alcove>& adjacent, const BlockPartition& blocks);

}  // namespace mpsym
