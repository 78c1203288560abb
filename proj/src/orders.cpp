#include "mpsym/orders.hpp"

#include <algorithm>
#include <map>

#include "mpsym/error.hpp"

namespace mpsym {

Partition comb_image(const Alcove& a, const Multipartition& lam) {
    Multipartition pre = a.sign == Sign::Plus ? transpose_multi(lam) : rev_multi(lam);
    return tau(a.s, act_sym(a.w, pre));
}

Verdict comb_order(const Alcove& a, const Multipartition& lam, const Multipartition& mu) {
    Verdict v = dominance_compare(comb_image(a, mu), comb_image(a, lam));
    if (v == Verdict::Equal && lam != mu)
        fail("InternalCutoff", "distinct multipartitions with equal bead images");
    return v;
}

Verdict comb_order_theta_l2(const ParamTheta& theta, const Multipartition& lam,
                            const Multipartition& mu) {
    L2Class cls = classify_theta_l2(theta);
    if (cls.kind != L2Class::Kind::AlcoveK)
        fail("OnWall", "parameter does not lie inside an alcove");
    return comb_order(l2_alcove(cls.index, cls.sign), lam, mu);
}

namespace {

// reachability of the preorder generated by the alcove orders on a fixed
// ground set: reach[u][v] says u is weakly below v through some chain
std::vector<std::vector<char>> preorder_reach(const std::vector<Alcove>& alcoves,
                                              const std::vector<Multipartition>& ground) {
    size_t n = ground.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) reach[i][i] = 1;
    for (const Alcove& a : alcoves) {
        std::vector<Partition> img;
        img.reserve(n);
        for (const Multipartition& mp : ground) img.push_back(comb_image(a, mp));
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v) {
                if (u == v) continue;
                if (dominance_compare(img[v], img[u]) == Verdict::Less) reach[u][v] = 1;
            }
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (size_t j = 0; j < n; ++j)
                if (reach[k][j]) reach[i][j] = 1;
        }
    return reach;
}

}  // namespace

bool wall_preorder(const std::vector<Alcove>& adjacent, const Multipartition& lam,
                   const Multipartition& mu) {
    if (lam == mu) return true;
    if (adjacent.empty()) return false;
    if (lam.size() != mu.size()) return false;
    if (total_weight(lam) != total_weight(mu)) return false;
    int l = static_cast<int>(lam.size());
    std::vector<Multipartition> ground = enumerate_multipartitions(l, total_weight(lam));
    auto reach = preorder_reach(adjacent, ground);
    auto pos = [&](const Multipartition& mp) {
        return static_cast<size_t>(
            std::find(ground.begin(), ground.end(), mp) - ground.begin());
    };
    return reach[pos(lam)][pos(mu)] != 0;
}

FinitePoset wall_preorder_poset(const std::vector<Alcove>& adjacent, int l, long long n) {
    std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
    std::vector<std::string> labels;
    labels.reserve(ground.size());
    for (const Multipartition& mp : ground) labels.push_back(multipartition_str(mp));
    return poset_from_closed(std::move(labels), preorder_reach(adjacent, ground));
}

FinitePoset order_poset(const Alcove& a, int l, long long n) {
    std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
    size_t sz = ground.size();
    std::vector<Partition> img;
    img.reserve(sz);
    std::vector<std::string> labels;
    labels.reserve(sz);
    for (const Multipartition& mp : ground) {
        img.push_back(comb_image(a, mp));
        labels.push_back(multipartition_str(mp));
    }
    std::vector<std::vector<char>> rel(sz, std::vector<char>(sz, 0));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
            rel[i][j] = (i == j) || dominance_compare(img[j], img[i]) == Verdict::Less;
    return poset_from_closed(std::move(labels), std::move(rel));
}

FinitePoset block_order(const std::vector<Alcove>& adjacent, const BlockPartition& blocks) {
    auto reach = preorder_reach(adjacent, blocks.items);
    size_t nc = blocks.classes.size();
    std::vector<std::string> labels;
    labels.reserve(nc);
    for (size_t c = 0; c < nc; ++c) labels.push_back(blocks.class_label(static_cast<int>(c)));
    std::vector<std::vector<char>> rel(nc, std::vector<char>(nc, 0));
    for (size_t c1 = 0; c1 < nc; ++c1)
        for (size_t c2 = 0; c2 < nc; ++c2) {
            if (c1 == c2) {
                rel[c1][c2] = 1;
                continue;
            }
            for (int i : blocks.classes[c1]) {
                for (int j : blocks.classes[c2])
                    if (reach[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                        rel[c1][c2] = 1;
                        break;
                    }
                if (rel[c1][c2]) break;
            }
        }
    return poset_from_closed(std::move(labels), std::move(rel));
}

}  // namespace mpsym
