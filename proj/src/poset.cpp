#include "mpsym/poset.hpp"

#include <algorithm>
#include <numeric>

#include "mpsym/error.hpp"

namespace mpsym {

namespace {

void close_reflexive_transitive(std::vector<std::vector<char>>& rel) {
    size_t n = rel.size();
    for (size_t i = 0; i < n; ++i) rel[i][i] = 1;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            if (!rel[i][k]) continue;
            for (size_t j = 0; j < n; ++j)
                if (rel[k][j]) rel[i][j] = 1;
        }
}

bool check_antisymmetric(const std::vector<std::vector<char>>& rel) {
    size_t n = rel.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rel[i][j] && rel[j][i]) return false;
    return true;
}

}  // namespace

FinitePoset poset_from_closed(std::vector<std::string> labels,
                              std::vector<std::vector<char>> rel) {
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.rel_ = std::move(rel);
    close_reflexive_transitive(p.rel_);
    p.antisymmetric_ = check_antisymmetric(p.rel_);
    return p;
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& pairs) {
    size_t n = labels.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : pairs) rel[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    return poset_from_closed(std::move(labels), std::move(rel));
}

std::vector<std::pair<int, int>> FinitePoset::hasse() const {
    if (!antisymmetric_)
        fail("PreorderNotOrder", "Hasse reduction needs a partial order");
    std::vector<std::pair<int, int>> covers;
    int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
            if (cover) covers.emplace_back(i, j);
        }
    return covers;
}

std::string FinitePoset::to_dot() const {
    auto covers = hasse();
    std::string out = "digraph poset {\n";
    for (int i = 0; i < size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + label(i) + "\"];\n";
    for (const auto& [a, b] : covers)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

bool FinitePoset::same_relation(const FinitePoset& other) const {
    return labels_ == other.labels_ && rel_ == other.rel_;
}

void validate_action(const GroupAction& a, int n_elements) {
    int g = a.order();
    if (g < 1 || static_cast<int>(a.act.size()) != g)
        fail("NonEquivariant", "action table size mismatch");
    for (int i = 0; i < g; ++i) {
        if (static_cast<int>(a.table[static_cast<size_t>(i)].size()) != g)
            fail("NonEquivariant", "composition table is not square");
        if (a.table[0][static_cast<size_t>(i)] != i || a.table[static_cast<size_t>(i)][0] != i)
            fail("NonEquivariant", "element 0 is not an identity");
        if (static_cast<int>(a.act[static_cast<size_t>(i)].size()) != n_elements)
            fail("NonEquivariant", "action row has wrong length");
    }
    for (int x = 0; x < n_elements; ++x)
        if (a.act[0][static_cast<size_t>(x)] != x)
            fail("NonEquivariant", "identity does not act trivially");
    for (int g1 = 0; g1 < g; ++g1)
        for (int g2 = 0; g2 < g; ++g2) {
            int prod = a.table[static_cast<size_t>(g1)][static_cast<size_t>(g2)];
            for (int x = 0; x < n_elements; ++x) {
                int lhs = a.act[static_cast<size_t>(prod)][static_cast<size_t>(x)];
                int rhs = a.act[static_cast<size_t>(g1)][static_cast<size_t>(
                    a.act[static_cast<size_t>(g2)][static_cast<size_t>(x)])];
                if (lhs != rhs) fail("NonEquivariant", "action is not compatible");
            }
        }
}

std::vector<std::vector<int>> orbits_of_action(const GroupAction& a, int n_elements) {
    std::vector<int> owner(static_cast<size_t>(n_elements), -1);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < n_elements; ++x) {
        if (owner[static_cast<size_t>(x)] >= 0) continue;
        std::vector<int> orb;
        for (int g = 0; g < a.order(); ++g) {
            int y = a.act[static_cast<size_t>(g)][static_cast<size_t>(x)];
            if (owner[static_cast<size_t>(y)] < 0) {
                owner[static_cast<size_t>(y)] = static_cast<int>(orbits.size());
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

FinitePoset quotient_by_group(const FinitePoset& p, const GroupAction& a) {
    int n = p.size();
    validate_action(a, n);
    for (int g = 0; g < a.order(); ++g)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (p.leq(x, y) &&
                    !p.leq(a.act[static_cast<size_t>(g)][static_cast<size_t>(x)],
                           a.act[static_cast<size_t>(g)][static_cast<size_t>(y)]))
                    fail("NonEquivariant", "relation is not preserved by the action");

    auto orbits = orbits_of_action(a, n);
    int q = static_cast<int>(orbits.size());
    std::vector<int> orbit_of(static_cast<size_t>(n));
    for (int o = 0; o < q; ++o)
        for (int x : orbits[static_cast<size_t>(o)]) orbit_of[static_cast<size_t>(x)] = o;

    std::vector<std::vector<char>> rel(static_cast<size_t>(q),
                                       std::vector<char>(static_cast<size_t>(q), 0));
    // pi(x) <= pi(y) iff x <= g.y for some g; by equivariance any
    // representative x works
    for (int o1 = 0; o1 < q; ++o1) {
        int x = orbits[static_cast<size_t>(o1)][0];
        for (int o2 = 0; o2 < q; ++o2)
            for (int y : orbits[static_cast<size_t>(o2)])
                if (p.leq(x, y)) {
                    rel[static_cast<size_t>(o1)][static_cast<size_t>(o2)] = 1;
                    break;
                }
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(q));
    for (const auto& orb : orbits) {
        std::string lab = "{";
        for (size_t k = 0; k < orb.size(); ++k) {
            if (k) lab += ',';
            lab += p.label(orb[k]);
        }
        lab += '}';
        labels.push_back(std::move(lab));
    }
    return poset_from_closed(std::move(labels), std::move(rel));
}

}  // namespace mpsym
