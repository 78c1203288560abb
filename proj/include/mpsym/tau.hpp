#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mpsym/partition.hpp"
#include "mpsym/rational.hpp"

namespace mpsym {

// Charges are l-tuples s = (s_0,...,s_{l-1}) with every l*s_i an integer and
// sum 0. Integer charges are the classical case; fractional ones arise from
// the twisted S_l action. For tau the interleaved entries l(x-1)+i must cover
// all residues mod l, which holds exactly when (l*frac(s_{i-1}) + i) mod l
// are pairwise distinct; charges violating that are rejected as malformed.
void check_charge(const Charge& s, int l);
void check_charge_for_tau(const Charge& s, int l);
bool is_integer_charge(const Charge& s);

// first k entries of beta_c(p) = (p_1 + c, p_2 + c - 1, ...), strictly decreasing
std::vector<Rat> beta_set(const Partition& p, const Rat& charge, int k);

// The charged bijection: interleave the component beta-sets via x -> l(x-1)+i
// and read the unique partition rho with beta_0(rho) equal to the merged set.
Partition tau(const Charge& s, const Multipartition& lam);

// inverse for integer charges: residues mod l separate the components
std::pair<Charge, Multipartition> tau_inverse(int l, const Partition& rho);

// the l-core attached to an integer charge: tau of the empty multipartition
Partition ell_core(const Charge& s);

// Remove removable boxes whose residue (column - row) mod l lies in J until
// none remain. The result is independent of removal order (tested).
Partition j_heart(const Partition& rho, int l, const std::set<int>& J);
bool j_class_eq(const Partition& a, const Partition& b, int l, const std::set<int>& J);

}  // namespace mpsym
