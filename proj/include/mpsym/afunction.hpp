#pragma once

#include <vector>

#include "mpsym/partition.hpp"
#include "mpsym/rational.hpp"

namespace mpsym {

// weight m together with a nonzero scale r
struct AContext {
    Charge m;
    Rat r;
};

// F(lam) = sum over pairs of min(k_i, k_j) = sum_j (j-1) k_j over the
// decreasing kappa sequence at size s; differences of F between two
// multipartitions of equal weight do not depend on s
Rat f_weight(const Multipartition& lam, const Charge& m, int s);

// a-function, normalized against the empty multipartition so the published
// sample values are reproduced: for r > 0
//   a(lam) = r*(F_s(lam) - F_s(empty)) + r*F_{n-1}(empty)
// with the trailing term present only when l >= 2 and n-1 is a valid size
// for the empty symbol; for r < 0 delegate to the componentwise transpose
// at (-m, -r)
Rat a_value(const Multipartition& lam, const AContext& ctx);

// order comparison of the c-function through the N statistic at size s:
// Less means c(lam) < c(mu) for r > 0; the verdict reverses for r < 0
Verdict c_compare(const Multipartition& lam, const Multipartition& mu,
                  const AContext& ctx, int s);

}  // namespace mpsym
