#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "mpsym/afunction.hpp"
#include "mpsym/blocks.hpp"
#include "mpsym/orders.hpp"
#include "mpsym/params.hpp"
#include "mpsym/symbols.hpp"
#include "mpsym/tau.hpp"
#include "mpsym/verify.hpp"

using namespace mpsym;

static int failures = 0;

static void report(int k, bool ok, const std::string& note = "") {
    std::cout << "AC" << k << (ok ? " PASS" : " FAIL");
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

static double timed_pass(const std::string& suite, bool& ok) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = run_suite(suite, VerifyOptions{});
    auto t1 = std::chrono::steady_clock::now();
    ok = ok && rep.passed() && rep.cases > 0;
    return std::chrono::duration<double>(t1 - t0).count();
}

int main() {
    const Multipartition lam{{}, {3, 2}};
    const Multipartition mu{{2, 2, 1}, {}};
    const std::vector<Rat> m_half{Rat(1, 2), Rat(0)};
    const std::vector<Rat> m_nine{Rat(9, 10), Rat(0)};
    const std::vector<Rat> m_one{Rat(1), Rat(0)};

    // 1: the displayed size 4 symbol of (-;(3,2)) at m = (1/2,0)
    {
        Symbol b = shifted_symbol(lam, m_half, 4);
        bool ok = b.rows.size() == 2 &&
                  b.rows[0] ==
                      std::vector<Rat>({Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(7, 2)}) &&
                  b.rows[1] == std::vector<Rat>({Rat(0), Rat(1), Rat(4), Rat(6)});
        report(1, ok);
    }

    // 2: the bijection example with its intermediate beta sets
    {
        Charge s{Rat(1), Rat(-1)};
        std::vector<Rat> b1 = beta_set({2, 2, 1}, Rat(1), 6);
        std::vector<Rat> b2 = beta_set({}, Rat(-1), 4);
        bool ok = b1 == std::vector<Rat>({Rat(3), Rat(2), Rat(0), Rat(-2), Rat(-3),
                                          Rat(-4)}) &&
                  b2 == std::vector<Rat>({Rat(-1), Rat(-2), Rat(-3), Rat(-4)});
        std::vector<long long> t1, t2;
        for (const Rat& x : b1) t1.push_back(2 * (x.numerator() - 1) + 1);
        for (const Rat& x : b2) t2.push_back(2 * (x.numerator() - 1) + 2);
        ok = ok && t1 == std::vector<long long>({5, 3, -1, -5, -7, -9}) &&
             t2 == std::vector<long long>({-2, -4, -6, -8});
        Partition rho = tau(s, {{2, 2, 1}, {}});
        ok = ok && rho == Partition({5, 4, 1, 1});
        ok = ok && beta_set(rho, Rat(0), 9) ==
                       std::vector<Rat>({Rat(5), Rat(3), Rat(-1), Rat(-2), Rat(-4),
                                         Rat(-5), Rat(-6), Rat(-7), Rat(-8)});
        report(2, ok);
    }

    // 3: the six kappa sequences at s = 4 with their comparison verdicts
    {
        bool ok = rat_seq_str(kappa(lam, m_half, 4)) == "6,4,7/2,5/2,3/2,1,1/2,0" &&
                  rat_seq_str(kappa(mu, m_half, 4)) == "11/2,9/2,3,5/2,2,1,1/2,0" &&
                  rat_seq_str(kappa(lam, m_nine, 4)) == "6,4,39/10,29/10,19/10,1,9/10,0" &&
                  rat_seq_str(kappa(mu, m_nine, 4)) == "59/10,49/10,3,29/10,2,1,9/10,0" &&
                  rat_seq_str(kappa(lam, m_one, 4)) == "6,4,4,3,2,1,1,0,0" &&
                  rat_seq_str(kappa(mu, m_one, 4)) == "6,5,3,3,2,1,1,0,0" &&
                  kappa_compare(lam, mu, m_half, 4) == Verdict::Greater &&
                  kappa_compare(lam, mu, m_nine, 4) == Verdict::Incomparable &&
                  kappa_compare(lam, mu, m_one, 4) == Verdict::Less;
        report(3, ok);
    }

    // 4: the four a-function values at r = 1
    {
        bool ok = a_value(lam, {m_half, Rat(1)}) == Rat(65, 2) &&
                  a_value(mu, {m_half, Rat(1)}) == Rat(34) &&
                  a_value(lam, {m_one, Rat(1)}) == Rat(40) &&
                  a_value(mu, {m_one, Rat(1)}) == Rat(39);
        report(4, ok);
    }

    // 5: order equivalences between kappa dominance and the bead images
    {
        bool ok = true;
        double sec = timed_pass("thm-kappa-tau", ok);
        ok = ok && sec < 60.0;
        report(5, ok, "elapsed " + std::to_string(sec).substr(0, 5) + "s, budget 60s");
    }

    // 6: kappa dominance forces the N order strictly, and reverses the a order
    {
        bool ok = true;
        timed_pass("thm-kappa-N", ok);
        timed_pass("thm-kappa-a", ok);
        report(6, ok);
    }

    // 7: bijection laws: roundtrip, weight, core, equivariance, transpose
    {
        bool ok = true;
        timed_pass("tau-roundtrip", ok);
        timed_pass("tau-equivariance", ok);
        timed_pass("tau-transpose", ok);
        report(7, ok);
    }

    // 8: the three blocks at the symmetric level 2 wall and the four classes
    // they induce for the index 2 subgroup
    {
        BlockPartition wb = cm_blocks_l2(2, {Rat(0), Rat(0)}, 3);
        bool ok = wb.classes.size() == 3 &&
                  wb.class_label(0) == "{[[],[2]],[[2],[]]}" &&
                  wb.class_label(1) == "{[[],[1,1]],[[1,1],[]]}" &&
                  wb.class_label(2) == "{[[1],[1]]}";
        GlenBlocks gb = glen_blocks(2, 2, 2, wb);
        ok = ok && gb.classes.size() == 4;
        report(8, ok);
    }

    // 9: half step comparisons and zigzag chains across every integer wall
    {
        bool ok = true;
        double sec = timed_pass("lemma-halfstep", ok);
        sec += timed_pass("blocks-zigzag", ok);
        ok = ok && sec < 120.0;
        report(9, ok, "elapsed " + std::to_string(sec).substr(0, 5) + "s, budget 120s");
    }

    // 10: negative control: on the d = 0 wall the pair is preorder equivalent
    // yet falls into two different blocks one alcove to the right
    {
        L2Class cls = classify_theta_l2(ParamTheta{{Rat(0), Rat(1)}});
        bool ok = cls.kind == L2Class::WallK && cls.index == 0 && cls.sign == Sign::Plus;
        auto adjp = wall_adjacent_alcoves_l2(0);
        std::vector<Alcove> adj{adjp.first, adjp.second};
        ok = ok && wall_preorder(adj, lam, mu) && wall_preorder(adj, mu, lam);
        int s = 0;
        for (const Multipartition& mp : enumerate_multipartitions(2, 5))
            s = std::max(s, min_size(mp, m_one));
        BlockPartition bp = cm_blocks_l2(5, m_one, s);
        int il = -1, im = -1;
        for (size_t i = 0; i < bp.items.size(); ++i) {
            if (bp.items[i] == lam) il = (int)i;
            if (bp.items[i] == mu) im = (int)i;
        }
        ok = ok && il >= 0 && im >= 0 && bp.class_of(il) != bp.class_of(im);
        report(10, ok);
    }

    // 11: randomized quotient laws under the fixed seed, plus closure and
    // Hasse idempotence on a concrete order
    {
        bool ok = true;
        timed_pass("poset-quotient", ok);
        FinitePoset p = FinitePoset::from_pairs({"a", "b", "c", "d"},
                                                {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
        FinitePoset q = FinitePoset::from_pairs(p.labels(), p.hasse());
        ok = ok && q.same_relation(p) &&
             FinitePoset::from_pairs(q.labels(), q.hasse()).same_relation(p);
        report(11, ok);
    }

    // 12: no desk scale instance exists for the variety level statements;
    // criteria 5 through 11 are the combinatorial surface standing in for them
    report(12, true,
           "substitution note: variety-level claims have no finite instance here; "
           "the order, block, bijection, and poset laws above are the accepted surface");

    return failures == 0 ? 0 : 1;
}
