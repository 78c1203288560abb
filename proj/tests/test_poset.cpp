#include "mpsym/poset.hpp"

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mpsym/error.hpp"

using namespace mpsym;

static int fails = 0;

static void check(bool ok, const std::string& what) {
    if (!ok) {
        ++fails;
        std::cerr << "FAIL: " << what << "\n";
    }
}

static bool throws_named(const std::function<void()>& f, const std::string& name) {
    try {
        f();
    } catch (const domain_error& e) {
        return e.name() == name;
    } catch (...) {
        return false;
    }
    return false;
}

int main() {
    // closure from generating pairs
    {
        FinitePoset p = FinitePoset::from_pairs({"a", "b", "c", "d"},
                                                {{0, 1}, {1, 2}, {2, 3}});
        check(p.size() == 4 && p.label(1) == "b", "labels");
        check(p.leq(0, 3), "transitive closure");
        check(p.leq(1, 1), "reflexive closure");
        check(!p.leq(3, 0), "no reverse relation");
        check(p.antisymmetric(), "chain is a partial order");
        auto covers = p.hasse();
        check(covers == std::vector<std::pair<int, int>>({{0, 1}, {1, 2}, {2, 3}}),
              "chain covers");
        // closure then hasse then closure is the identity on the relation
        FinitePoset q = FinitePoset::from_pairs(p.labels(), covers);
        check(q.same_relation(p), "hasse round trip");
        // a redundant generating edge disappears from the covers
        FinitePoset r = FinitePoset::from_pairs({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
        check(r.hasse() == std::vector<std::pair<int, int>>({{0, 1}, {1, 2}}),
              "transitive reduction");
        std::string dot = r.to_dot();
        check(dot.find("digraph") != std::string::npos &&
                  dot.find("n0 [label=\"a\"]") != std::string::npos &&
                  dot.find("n0 -> n1") != std::string::npos &&
                  dot.find("n0 -> n2") == std::string::npos,
              "dot output");
    }

    // a cycle is a preorder, not an order
    {
        FinitePoset p = FinitePoset::from_pairs({"x", "y"}, {{0, 1}, {1, 0}});
        check(!p.antisymmetric(), "cycle not antisymmetric");
        check(p.leq(0, 1) && p.leq(1, 0), "cycle closed both ways");
        check(throws_named([&] { p.hasse(); }, "PreorderNotOrder"), "hasse needs an order");
        check(throws_named([&] { p.to_dot(); }, "PreorderNotOrder"), "dot needs an order");
    }

    // direct construction from an adjacency matrix closes up
    {
        std::vector<std::vector<char>> rel{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
        FinitePoset p = poset_from_closed({"a", "b", "c"}, rel);
        check(p.leq(0, 2) && p.leq(0, 0), "matrix closure");
        check(p.antisymmetric(), "matrix order certified");
    }

    check(!FinitePoset::from_pairs({"a", "b"}, {{0, 1}})
               .same_relation(FinitePoset::from_pairs({"a", "b"}, {{1, 0}})),
          "same_relation detects differences");

    // C2 swapping two parallel chains: quotient is one chain
    {
        FinitePoset p = FinitePoset::from_pairs({"a0", "b0", "a1", "b1"},
                                                {{0, 1}, {2, 3}});
        GroupAction swap2{{{0, 1}, {1, 0}}, {{0, 1, 2, 3}, {2, 3, 0, 1}}};
        validate_action(swap2, 4);
        check(orbits_of_action(swap2, 4) ==
                  std::vector<std::vector<int>>({{0, 2}, {1, 3}}),
              "orbits");
        FinitePoset q = quotient_by_group(p, swap2);
        check(q.size() == 2, "two orbits");
        check(q.leq(0, 1) && !q.leq(1, 0) && q.antisymmetric(), "quotient chain");
        check(q.label(0) == "{a0,a1}", "orbit label");
    }

    // crossed chains: the relation only reaches the other orbit through the
    // action, yet the quotient of a finite order stays an order (a strict
    // cycle would lift to x < g.x < g^2.x < ... < x)
    {
        FinitePoset p = FinitePoset::from_pairs({"x1", "y1", "x2", "y2"},
                                                {{0, 3}, {2, 1}});
        check(p.antisymmetric(), "crossed chains form an order");
        GroupAction swap2{{{0, 1}, {1, 0}}, {{0, 1, 2, 3}, {2, 3, 0, 1}}};
        FinitePoset q = quotient_by_group(p, swap2);
        check(q.size() == 2 && q.leq(0, 1) && !q.leq(1, 0), "crossed relation descends");
        check(q.antisymmetric(), "quotient of an order stays an order");
    }

    // a preorder input keeps its cycles in the quotient
    {
        FinitePoset p = FinitePoset::from_pairs({"x", "y"}, {{0, 1}, {1, 0}});
        GroupAction trivial{{{0}}, {{0, 1}}};
        validate_action(trivial, 2);
        FinitePoset q = quotient_by_group(p, trivial);
        check(q.size() == 2 && q.leq(0, 1) && q.leq(1, 0), "cycle survives");
        check(!q.antisymmetric(), "preorder in, preorder out");
    }

    // equivariance is required
    {
        FinitePoset p = FinitePoset::from_pairs({"a", "b"}, {{0, 1}});
        GroupAction flip{{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}};
        validate_action(flip, 2);
        check(throws_named([&] { quotient_by_group(p, flip); }, "NonEquivariant"),
              "order must be action invariant");
    }

    // malformed actions are rejected outright
    {
        GroupAction notid{{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
        check(throws_named([&] { validate_action(notid, 2); }, "NonEquivariant"),
              "element 0 must be the identity");
        GroupAction notbij{{{0, 1}, {1, 0}}, {{0, 1}, {0, 0}}};
        check(throws_named([&] { validate_action(notbij, 2); }, "NonEquivariant"),
              "actions must be bijections");
        GroupAction nothom{{{0, 1}, {1, 1}}, {{0, 1}, {1, 0}}};
        check(throws_named([&] { validate_action(nothom, 2); }, "NonEquivariant"),
              "table must be a group");
    }

    // C3 rotating three disjoint chains of length 2
    {
        std::vector<std::string> labels{"a0", "b0", "a1", "b1", "a2", "b2"};
        FinitePoset p =
            FinitePoset::from_pairs(labels, {{0, 1}, {2, 3}, {4, 5}});
        GroupAction rot3{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
                         {{0, 1, 2, 3, 4, 5}, {2, 3, 4, 5, 0, 1}, {4, 5, 0, 1, 2, 3}}};
        validate_action(rot3, 6);
        FinitePoset q = quotient_by_group(p, rot3);
        check(q.size() == 2 && q.leq(0, 1) && !q.leq(1, 0), "C3 quotient chain");
    }

    if (fails == 0) std::cout << "test_poset: all checks passed\n";
    return fails == 0 ? 0 : 1;
}
