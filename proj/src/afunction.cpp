#include "mpsym/afunction.hpp"

#include <algorithm>

#include "mpsym/error.hpp"
#include "mpsym/symbols.hpp"

namespace mpsym {

Rat f_weight(const Multipartition& lam, const Charge& m, int s) {
    std::vector<Rat> kap = kappa(lam, m, s);
    Rat total(0);
    for (size_t j = 0; j < kap.size(); ++j) total += Rat(static_cast<long long>(j)) * kap[j];
    return total;
}

Rat a_value(const Multipartition& lam, const AContext& ctx) {
    if (ctx.r == Rat(0)) fail("ZeroR", "scale r must be nonzero");
    if (ctx.r < Rat(0)) {
        AContext neg;
        neg.r = -ctx.r;
        neg.m.reserve(ctx.m.size());
        for (const Rat& x : ctx.m) neg.m.push_back(-x);
        return a_value(transpose_multi(lam), neg);
    }
    int l = static_cast<int>(lam.size());
    Multipartition empty(static_cast<size_t>(l));
    long long n = total_weight(lam);
    int s = std::max(min_size(lam, ctx.m), min_size(empty, ctx.m));
    Rat base = f_weight(lam, ctx.m, s) - f_weight(empty, ctx.m, s);
    Rat tail(0);
    if (l >= 2 && n - 1 >= min_size(empty, ctx.m))
        tail = f_weight(empty, ctx.m, static_cast<int>(n - 1));
    return ctx.r * (base + tail);
}

Verdict c_compare(const Multipartition& lam, const Multipartition& mu,
                  const AContext& ctx, int s) {
    if (ctx.r == Rat(0)) fail("ZeroR", "scale r must be nonzero");
    Rat nl = n_value(lam, ctx.m, s);
    Rat nm = n_value(mu, ctx.m, s);
    Verdict v = nl < nm ? Verdict::Less : nl > nm ? Verdict::Greater : Verdict::Equal;
    return ctx.r > Rat(0) ? v : verdict_flip(v);
}

}  // namespace mpsym
