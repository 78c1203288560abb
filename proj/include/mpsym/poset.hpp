#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mpsym {

// Finite preorder over opaque labels, stored reflexively and transitively
// closed. A certification bit records whether the relation is antisymmetric
// (a partial order); operations that need a partial order check it.
class FinitePoset {
public:
    static FinitePoset from_pairs(std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool leq(int i, int j) const {
        return rel_[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0;
    }
    bool antisymmetric() const { return antisymmetric_; }

    // cover pairs of the partial order; PreorderNotOrder when uncertified
    std::vector<std::pair<int, int>> hasse() const;
    std::string to_dot() const;  // DOT digraph over the Hasse covers

    bool same_relation(const FinitePoset& other) const;  // labels and relation equal

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> rel_;
    bool antisymmetric_ = true;
    friend FinitePoset quotient_by_group(const FinitePoset&, const struct GroupAction&);
    friend FinitePoset poset_from_closed(std::vector<std::string>,
                                         std::vector<std::vector<char>>);
};

// build directly from an adjacency matrix; closure and certification applied
FinitePoset poset_from_closed(std::vector<std::string> labels,
                              std::vector<std::vector<char>> rel);

// Finite group acting on the poset's elements. Element 0 must be the
// identity; table[g][h] is the product g*h; act[g][x] the image of x.
struct GroupAction {
    std::vector<std::vector<int>> table;
    std::vector<std::vector<int>> act;
    int order() const { return static_cast<int>(table.size()); }
};

// validates the action laws; throws NonEquivariant on violation
void validate_action(const GroupAction& a, int n_elements);

// Orbit poset with pi(x) <= pi(y) iff x <= g.y for some g, then closure.
// Requires the relation to be compatible with the action (x <= y implies
// g.x <= g.y for all g); NonEquivariant otherwise. Orbits are ordered by
// minimal member index and labeled {member,member,...}.
FinitePoset quotient_by_group(const FinitePoset& p, const GroupAction& a);

// orbit partition of 0..n-1 under the action, ordered by minimal member
std::vector<std::vector<int>> orbits_of_action(const GroupAction& a, int n_elements);

}  // namespace mpsym
