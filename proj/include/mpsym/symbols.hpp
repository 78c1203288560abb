#pragma once

#include <vector>

#include "mpsym/partition.hpp"
#include "mpsym/rational.hpp"

namespace mpsym {

// Shifted m-symbol of a multipartition. Row i (0-based, i = 0..l-1) pairs the
// parameter m^i with the component lam^{i+1}: with h = height(lam^{i+1}) and
// hc^i = h - m^i, the row is beta^i(t_i) for the shift t_i = s - hc^i, where
// beta^i = (lam_h, ..., lam_j - j + h, ..., lam_1 - 1 + h) and
// beta(t) = (t-[t], t-[t]+1, ..., t-1, beta_1 + t, ..., beta_k + t) for t >= 1,
// beta unchanged for 0 <= t < 1. Rows are weakly increasing; all entries of
// row i share the fractional part of m^i.
struct Symbol {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> m;
    int s = 1;
    Multipartition source;
};

// hc^i for one row, and the max over rows
Rat hc_row(const Partition& comp, const Rat& mi);
Rat hc_max(const Multipartition& lam, const std::vector<Rat>& m);

// smallest valid symbol size: the least positive integer s with s >= hc + 1
int min_size(const Multipartition& lam, const std::vector<Rat>& m);

Symbol shifted_symbol(const Multipartition& lam, const std::vector<Rat>& m, int s);

// all symbol rows merged and sorted decreasing
std::vector<Rat> kappa(const Multipartition& lam, const std::vector<Rat>& m, int s);

// N = l * sum_i ([k_i]+1)(2k_i - [k_i])/2 over the kappa entries, the closed
// form of the double sum l * sum_i sum_{j=0}^{[k_i]} (k_i - j)
Rat n_value(const Multipartition& lam, const std::vector<Rat>& m, int s);
Rat n_of_kappa(int l, const std::vector<Rat>& kap);  // NegativeEntry if some k_i < 0

Verdict kappa_compare(const Multipartition& lam, const Multipartition& mu,
                      const std::vector<Rat>& m, int s);

}  // namespace mpsym
