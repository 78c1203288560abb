#include "mpsym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "mpsym/afunction.hpp"
#include "mpsym/blocks.hpp"
#include "mpsym/error.hpp"
#include "mpsym/orders.hpp"
#include "mpsym/params.hpp"
#include "mpsym/partition.hpp"
#include "mpsym/poset.hpp"
#include "mpsym/symbols.hpp"
#include "mpsym/tau.hpp"

namespace mpsym {
namespace {

struct Collector {
    std::atomic<long long> cases{0};
    std::mutex mu;
    std::vector<std::string> bad;
    std::vector<std::string> notes;
    void add(long long k) { cases.fetch_add(k, std::memory_order_relaxed); }
    void fail_case(std::string s) {
        std::lock_guard<std::mutex> g(mu);
        bad.push_back(std::move(s));
    }
    void note(std::string s) {
        std::lock_guard<std::mutex> g(mu);
        notes.push_back(std::move(s));
    }
};

void run_tasks(std::vector<std::function<void()>>& tasks, int jobs, Collector& col) {
    if (tasks.empty()) return;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > static_cast<int>(tasks.size())) jobs = static_cast<int>(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&tasks, &next, &col] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            try {
                tasks[i]();
            } catch (const std::exception& e) {
                col.fail_case(std::string("unexpected exception: ") + e.what());
            }
        }
    };
    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
}

std::vector<int> grid_levels(const VerifyOptions& o) {
    if (o.l != 0) return {o.l};
    return {2, 3};
}

void charges_rec(int l, long long bound, long long sum, Charge& cur,
                 std::vector<Charge>& out) {
    if (static_cast<int>(cur.size()) == l) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    for (long long v = -bound; v <= bound; ++v) {
        cur.push_back(Rat(v));
        charges_rec(l, bound, sum + v, cur, out);
        cur.pop_back();
    }
}

std::vector<Charge> integer_charges(int l, long long bound) {
    std::vector<Charge> out;
    Charge cur;
    charges_rec(l, bound, 0, cur, out);
    return out;
}

// weights over denominators 1, 2, 3, 10
std::vector<Charge> m_grid(int l) {
    if (l == 2)
        return {{Rat(0), Rat(0)},      {Rat(1), Rat(0)},      {Rat(2), Rat(0)},
                {Rat(-1), Rat(0)},     {Rat(1, 2), Rat(0)},   {Rat(3, 2), Rat(0)},
                {Rat(1, 3), Rat(0)},   {Rat(9, 10), Rat(0)}};
    return {{Rat(0), Rat(0), Rat(0)},       {Rat(1), Rat(0), Rat(0)},
            {Rat(1), Rat(1), Rat(0)},       {Rat(1, 2), Rat(0), Rat(0)},
            {Rat(1), Rat(1, 3), Rat(0)},    {Rat(9, 10), Rat(1, 2), Rat(0)}};
}

std::string cstr(const Charge& s) { return "(" + rat_seq_str(s) + ")"; }

int pair_size(const Multipartition& a, const Multipartition& b,
              const std::vector<Rat>& m) {
    return std::max(min_size(a, m), min_size(b, m));
}

int ground_size(const std::vector<Multipartition>& ground, const std::vector<Rat>& m) {
    int s = 1;
    for (const Multipartition& mp : ground) s = std::max(s, min_size(mp, m));
    return s;
}

// ---------------------------------------------------------------------------
// independent l-core: remove border strips of length l directly on the
// diagram until none is removable

bool remove_border_strip(Partition& p, int l) {
    int rows = static_cast<int>(p.size());
    for (int r = 0; r < rows; ++r) {
        if (p[static_cast<size_t>(r)] == 0) continue;
        // walk the rim from the last cell of row r collecting l cells; the
        // walk drops to the next row when a cell exists below, else steps left
        int i = r;
        long long j = p[static_cast<size_t>(r)] - 1;
        std::vector<long long> leftmost(static_cast<size_t>(rows), -1);
        int count = 0;
        bool ok = true;
        while (count < l) {
            leftmost[static_cast<size_t>(i)] = j;
            ++count;
            if (count == l) break;
            if (i + 1 < rows && p[static_cast<size_t>(i + 1)] > j) {
                ++i;
            } else if (j > 0) {
                --j;
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        long long below = (i + 1 < rows) ? p[static_cast<size_t>(i + 1)] : 0;
        if (leftmost[static_cast<size_t>(i)] < below) continue;  // would break shape
        Partition q = p;
        for (int t = r; t <= i; ++t)
            q[static_cast<size_t>(t)] =
                (t < i) ? p[static_cast<size_t>(t + 1)] - 1 : leftmost[static_cast<size_t>(i)];
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (!is_partition(q)) continue;
        p = std::move(q);
        return true;
    }
    return false;
}

Partition strip_core(Partition p, int l) {
    while (remove_border_strip(p, l)) {
    }
    return p;
}

// ---------------------------------------------------------------------------
// suites

void suite_thm_kappa_tau(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, integer charges |s_i| <= 2, "
               "sizes base..base+2, both transpose and reversal forms";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& s : integer_charges(l, 2))
                tasks.push_back([l, n, s, &col] {
                    std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
                    size_t g = ground.size();
                    std::vector<Partition> t3(g), t4(g);
                    for (size_t i = 0; i < g; ++i) {
                        t3[i] = tau(s, transpose_multi(ground[i]));
                        t4[i] = tau(s, rev_multi(ground[i]));
                    }
                    std::vector<Rat> m3(static_cast<size_t>(l)), m4(static_cast<size_t>(l));
                    for (int i = 0; i < l; ++i) {
                        m3[static_cast<size_t>(i)] = -s[static_cast<size_t>(i)] - Rat(i, l);
                        m4[static_cast<size_t>(i)] =
                            s[static_cast<size_t>(l - 1 - i)] - Rat(i, l);
                    }
                    for (size_t a = 0; a < g; ++a)
                        for (size_t b = 0; b < g; ++b) {
                            Verdict got3 = dominance_compare(t3[a], t3[b]);
                            Verdict got4 = dominance_compare(t4[a], t4[b]);
                            int b3 = pair_size(ground[a], ground[b], m3);
                            int b4 = pair_size(ground[a], ground[b], m4);
                            for (int d = 0; d < 3; ++d) {
                                Verdict want3 =
                                    kappa_compare(ground[b], ground[a], m3, b3 + d);
                                if (got3 != want3)
                                    col.fail_case("part=transpose l=" + std::to_string(l) +
                                                  " n=" + std::to_string(n) + " s=" + cstr(s) +
                                                  " size=" + std::to_string(b3 + d) +
                                                  " lam=" + multipartition_str(ground[a]) +
                                                  " mu=" + multipartition_str(ground[b]) +
                                                  " tau=" + verdict_name(got3) +
                                                  " kappa=" + verdict_name(want3));
                                Verdict want4 =
                                    kappa_compare(ground[a], ground[b], m4, b4 + d);
                                if (got4 != want4)
                                    col.fail_case("part=reversal l=" + std::to_string(l) +
                                                  " n=" + std::to_string(n) + " s=" + cstr(s) +
                                                  " size=" + std::to_string(b4 + d) +
                                                  " lam=" + multipartition_str(ground[a]) +
                                                  " mu=" + multipartition_str(ground[b]) +
                                                  " tau=" + verdict_name(got4) +
                                                  " kappa=" + verdict_name(want4));
                            }
                            col.add(6);
                        }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_thm_kappa_n(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, m over denominators {1,2,3,10}, "
               "sizes base..base+2; kappa Less must force strict N increase";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& m : m_grid(l))
                tasks.push_back([l, n, m, &col] {
                    std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
                    for (size_t a = 0; a < ground.size(); ++a)
                        for (size_t b = 0; b < ground.size(); ++b) {
                            if (a == b) continue;
                            int base = pair_size(ground[a], ground[b], m);
                            for (int d = 0; d < 3; ++d) {
                                if (kappa_compare(ground[a], ground[b], m, base + d) !=
                                    Verdict::Less)
                                    continue;
                                if (!(n_value(ground[a], m, base + d) <
                                      n_value(ground[b], m, base + d)))
                                    col.fail_case(
                                        "l=" + std::to_string(l) + " n=" + std::to_string(n) +
                                        " m=" + cstr(m) + " size=" + std::to_string(base + d) +
                                        " lam=" + multipartition_str(ground[a]) +
                                        " mu=" + multipartition_str(ground[b]) +
                                        " kappa=Less but N not strictly smaller");
                            }
                            col.add(3);
                        }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_thm_kappa_a(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l=2 fixed, n <= min(max_n,3), r=1, m in {(0,0),(1/2,0),(1,0),(2,0)}; "
               "kappa Less must force a strictly larger";
    std::vector<Charge> ms = {{Rat(0), Rat(0)},
                              {Rat(1, 2), Rat(0)},
                              {Rat(1), Rat(0)},
                              {Rat(2), Rat(0)}};
    std::vector<std::function<void()>> tasks;
    for (long long n = 0; n <= std::min<long long>(opt.max_n, 3); ++n)
        for (const Charge& m : ms)
            tasks.push_back([n, m, &col] {
                std::vector<Multipartition> ground = enumerate_multipartitions(2, n);
                AContext ctx{m, Rat(1)};
                std::vector<Rat> av;
                av.reserve(ground.size());
                for (const Multipartition& mp : ground) av.push_back(a_value(mp, ctx));
                for (size_t a = 0; a < ground.size(); ++a)
                    for (size_t b = 0; b < ground.size(); ++b) {
                        if (a == b) continue;
                        int base = pair_size(ground[a], ground[b], m);
                        if (kappa_compare(ground[a], ground[b], m, base) == Verdict::Less &&
                            !(av[a] > av[b]))
                            col.fail_case("n=" + std::to_string(n) + " m=" + cstr(m) +
                                          " lam=" + multipartition_str(ground[a]) +
                                          " mu=" + multipartition_str(ground[b]) +
                                          " kappa=Less but a(lam)=" + rat_str(av[a]) +
                                          " !> a(mu)=" + rat_str(av[b]));
                        col.add(1);
                    }
            });
    run_tasks(tasks, opt.jobs, col);
}

void suite_tau_roundtrip(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, integer charges |s_i| <= 2; inverse "
               "round-trip, weight law, and core law against diagram strip removal";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& s : integer_charges(l, 2))
                tasks.push_back([l, n, s, &col] {
                    Partition core = ell_core(s);
                    long long cw = weight(core);
                    for (const Multipartition& mp : enumerate_multipartitions(l, n)) {
                        Partition rho = tau(s, mp);
                        std::string where = "l=" + std::to_string(l) + " s=" + cstr(s) +
                                            " lam=" + multipartition_str(mp);
                        if (weight(rho) != l * n + cw)
                            col.fail_case(where + " weight " + std::to_string(weight(rho)) +
                                          " != l*n + |core| = " + std::to_string(l * n + cw));
                        auto back = tau_inverse(l, rho);
                        if (back.first != s || back.second != mp)
                            col.fail_case(where + " inverse returned s=" + cstr(back.first) +
                                          " lam=" + multipartition_str(back.second));
                        if (strip_core(rho, l) != core)
                            col.fail_case(where + " diagram core " +
                                          partition_str(strip_core(rho, l)) +
                                          " != " + partition_str(core));
                        col.add(3);
                    }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_tau_equivariance(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, integer charges |s_i| <= 2, all w; "
               "tau(w.s, w.lam) = tau(s, lam) under the twisted charge action";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& s : integer_charges(l, 2))
                tasks.push_back([l, n, s, &col] {
                    std::vector<Permutation> ws = all_permutations(l);
                    for (const Multipartition& mp : enumerate_multipartitions(l, n)) {
                        Partition ref = tau(s, mp);
                        for (const Permutation& w : ws) {
                            if (tau(act_charge(w, s), act_sym(w, mp)) != ref)
                                col.fail_case("l=" + std::to_string(l) + " s=" + cstr(s) +
                                              " w=" + w.to_string() +
                                              " lam=" + multipartition_str(mp));
                            col.add(1);
                        }
                    }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_tau_transpose(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, integer charges |s_i| <= 2; "
               "transpose(tau_s(lam)) = tau_{-rev s}(rev t(lam))";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& s : integer_charges(l, 2))
                tasks.push_back([l, n, s, &col] {
                    Charge negrev(s.size());
                    for (int i = 0; i < l; ++i)
                        negrev[static_cast<size_t>(i)] = -s[static_cast<size_t>(l - 1 - i)];
                    for (const Multipartition& mp : enumerate_multipartitions(l, n)) {
                        Partition lhs = transpose(tau(s, mp));
                        Partition rhs = tau(negrev, rev_multi(transpose_multi(mp)));
                        if (lhs != rhs)
                            col.fail_case("l=" + std::to_string(l) + " s=" + cstr(s) +
                                          " lam=" + multipartition_str(mp) + " lhs=" +
                                          partition_str(lhs) + " rhs=" + partition_str(rhs));
                        col.add(1);
                    }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_kappa_sum_const(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, m over denominators {1,2,3,10}, "
               "sizes S..S+2; sum of kappa = n + sum for the empty multipartition";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& m : m_grid(l))
                tasks.push_back([l, n, m, &col] {
                    std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
                    Multipartition empty(static_cast<size_t>(l));
                    int s0 = std::max(ground_size(ground, m), min_size(empty, m));
                    for (int d = 0; d < 3; ++d) {
                        Rat base(0);
                        for (const Rat& k : kappa(empty, m, s0 + d)) base += k;
                        for (const Multipartition& mp : ground) {
                            Rat tot(0);
                            for (const Rat& k : kappa(mp, m, s0 + d)) tot += k;
                            if (tot != base + Rat(n))
                                col.fail_case("l=" + std::to_string(l) + " m=" + cstr(m) +
                                              " size=" + std::to_string(s0 + d) +
                                              " lam=" + multipartition_str(mp) +
                                              " sum=" + rat_str(tot) +
                                              " expected=" + rat_str(base + Rat(n)));
                            col.add(1);
                        }
                    }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_kappa_equivariance(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, m over denominators {1,2,3,10}, all w; "
               "kappa(w.lam, w.m) = kappa(lam, m)";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& m : m_grid(l))
                tasks.push_back([l, n, m, &col] {
                    std::vector<Permutation> ws = all_permutations(l);
                    for (const Multipartition& mp : enumerate_multipartitions(l, n)) {
                        int s0 = min_size(mp, m);
                        for (const Permutation& w : ws) {
                            std::vector<Rat> wm = act_sym_q(w, m);
                            Multipartition wmp = act_sym(w, mp);
                            for (int d = 0; d < 2; ++d)
                                if (kappa(mp, m, s0 + d) != kappa(wmp, wm, s0 + d))
                                    col.fail_case("l=" + std::to_string(l) + " m=" + cstr(m) +
                                                  " w=" + w.to_string() +
                                                  " size=" + std::to_string(s0 + d) +
                                                  " lam=" + multipartition_str(mp));
                            col.add(2);
                        }
                    }
                });
    run_tasks(tasks, opt.jobs, col);
}

void suite_adjacent_swap_n(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, weights with an equal adjacent pair; "
               "swapping the matching components preserves kappa and N";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt)) {
        std::vector<Charge> ms;
        if (l == 2)
            ms = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(1, 2), Rat(1, 2)}};
        else
            ms = {{Rat(0), Rat(0), Rat(0)},
                  {Rat(1), Rat(1), Rat(0)},
                  {Rat(0), Rat(1), Rat(1)},
                  {Rat(1, 2), Rat(1, 2), Rat(0)},
                  {Rat(0), Rat(1, 3), Rat(1, 3)}};
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& m : ms)
                tasks.push_back([l, n, m, &col] {
                    for (int i = 0; i + 1 < l; ++i) {
                        if (m[static_cast<size_t>(i)] != m[static_cast<size_t>(i + 1)])
                            continue;
                        // transposition of components i+1, i+2 (1-based)
                        Permutation w = Permutation::identity(l);
                        std::swap(w.img[static_cast<size_t>(i)],
                                  w.img[static_cast<size_t>(i + 1)]);
                        for (const Multipartition& mp : enumerate_multipartitions(l, n)) {
                            Multipartition sw = act_sym(w, mp);
                            int s0 = std::max(min_size(mp, m), min_size(sw, m));
                            if (kappa(mp, m, s0) != kappa(sw, m, s0) ||
                                n_value(mp, m, s0) != n_value(sw, m, s0))
                                col.fail_case("l=" + std::to_string(l) + " m=" + cstr(m) +
                                              " swap=" + std::to_string(i + 1) + "," +
                                              std::to_string(i + 2) +
                                              " lam=" + multipartition_str(mp));
                            col.add(1);
                        }
                    }
                });
    }
    run_tasks(tasks, opt.jobs, col);
}

void suite_alcove_kappa_dict(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l in {2,3} (or --l), n <= max_n, integer charges |s_i| <= 2, all w, both "
               "signs, sizes base..base+2; alcove order matches the kappa order at the "
               "dictionary weight";
    std::vector<std::function<void()>> tasks;
    for (int l : grid_levels(opt))
        for (long long n = 0; n <= opt.max_n; ++n)
            for (const Charge& s : integer_charges(l, 2))
                for (Sign sign : {Sign::Plus, Sign::Minus})
                    tasks.push_back([l, n, s, sign, &col] {
                        std::vector<Multipartition> ground =
                            enumerate_multipartitions(l, n);
                        for (const Permutation& w : all_permutations(l)) {
                            Alcove a{s, w, sign};
                            Charge sp = act_charge(w.inverse(), s);
                            std::vector<Rat> m(static_cast<size_t>(l));
                            for (int i = 0; i < l; ++i)
                                m[static_cast<size_t>(i)] =
                                    sign == Sign::Plus
                                        ? -sp[static_cast<size_t>(i)] - Rat(i, l)
                                        : sp[static_cast<size_t>(l - 1 - i)] - Rat(i, l);
                            std::vector<Partition> img;
                            img.reserve(ground.size());
                            for (const Multipartition& mp : ground)
                                img.push_back(comb_image(a, mp));
                            for (size_t x = 0; x < ground.size(); ++x)
                                for (size_t y = 0; y < ground.size(); ++y) {
                                    Verdict got = dominance_compare(img[y], img[x]);
                                    int base = pair_size(ground[x], ground[y], m);
                                    for (int d = 0; d < 3; ++d) {
                                        Verdict want =
                                            sign == Sign::Plus
                                                ? kappa_compare(ground[x], ground[y], m,
                                                                base + d)
                                                : kappa_compare(ground[y], ground[x], m,
                                                                base + d);
                                        if (got != want)
                                            col.fail_case(
                                                "alcove=" + a.to_string() +
                                                " n=" + std::to_string(n) + " size=" +
                                                std::to_string(base + d) + " lam=" +
                                                multipartition_str(ground[x]) + " mu=" +
                                                multipartition_str(ground[y]) + " comb=" +
                                                verdict_name(got) + " kappa=" +
                                                verdict_name(want));
                                    }
                                    col.add(3);
                                }
                        }
                    });
    run_tasks(tasks, opt.jobs, col);
}

void suite_lemma_halfstep(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l=2 fixed, integer walls d in [-2,2], n <= max_n; every same-block pair "
               "joined by steps strictly comparable at m+(1/2,0) and m-(1/2,0) with "
               "opposite orientations";
    std::vector<std::function<void()>> tasks;
    for (long long d = -2; d <= 2; ++d)
        for (long long n = 0; n <= opt.max_n; ++n)
            tasks.push_back([d, n, &col] {
                Charge m = {Rat(d), Rat(0)};
                Charge up = {Rat(d) + Rat(1, 2), Rat(0)};
                Charge dn = {Rat(d) - Rat(1, 2), Rat(0)};
                std::vector<Multipartition> ground = enumerate_multipartitions(2, n);
                int S = std::max(ground_size(ground, m),
                                 std::max(ground_size(ground, up), ground_size(ground, dn)));
                BlockPartition bp = cm_blocks_l2(n, m, S);
                for (size_t c = 0; c < bp.classes.size(); ++c) {
                    const std::vector<int>& cls = bp.classes[c];
                    if (cls.size() < 2) continue;
                    size_t k = cls.size();
                    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
                    for (size_t x = 0; x < k; ++x)
                        for (size_t y = x + 1; y < k; ++y) {
                            const Multipartition& a = bp.items[static_cast<size_t>(cls[x])];
                            const Multipartition& b = bp.items[static_cast<size_t>(cls[y])];
                            Verdict vu = kappa_compare(a, b, up, S);
                            Verdict vd = kappa_compare(a, b, dn, S);
                            bool step = (vu == Verdict::Less && vd == Verdict::Greater) ||
                                        (vu == Verdict::Greater && vd == Verdict::Less);
                            adj[x][y] = adj[y][x] = step ? 1 : 0;
                        }
                    // connectivity of the half-step graph inside the block
                    std::vector<char> seen(k, 0);
                    std::vector<size_t> stack = {0};
                    seen[0] = 1;
                    while (!stack.empty()) {
                        size_t u = stack.back();
                        stack.pop_back();
                        for (size_t v = 0; v < k; ++v)
                            if (adj[u][v] && !seen[v]) {
                                seen[v] = 1;
                                stack.push_back(v);
                            }
                    }
                    for (size_t v = 0; v < k; ++v)
                        if (!seen[v])
                            col.fail_case(
                                "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                " block=" + bp.class_label(static_cast<int>(c)) +
                                " unreachable " +
                                multipartition_str(bp.items[static_cast<size_t>(cls[v])]));
                    col.add(static_cast<long long>(k * (k - 1) / 2));
                }
            });
    run_tasks(tasks, opt.jobs, col);
}

void suite_blocks_zigzag(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "l=2 fixed, integer walls c in [-2,2], n <= max_n; same-block pairs are "
               "mutually reachable in the preorder of the two adjacent alcoves";
    std::vector<std::function<void()>> tasks;
    for (long long c = -2; c <= 2; ++c)
        for (long long n = 0; n <= opt.max_n; ++n)
            tasks.push_back([c, n, &col] {
                Charge m = {Rat(c), Rat(0)};
                std::vector<Multipartition> ground = enumerate_multipartitions(2, n);
                int S = ground_size(ground, m);
                BlockPartition bp = cm_blocks_l2(n, m, S);
                auto adj = wall_adjacent_alcoves_l2(1 - c, Sign::Minus);
                FinitePoset pre = wall_preorder_poset({adj.first, adj.second}, 2, n);
                for (size_t cl = 0; cl < bp.classes.size(); ++cl) {
                    const std::vector<int>& cls = bp.classes[cl];
                    for (size_t x = 0; x < cls.size(); ++x)
                        for (size_t y = x + 1; y < cls.size(); ++y) {
                            if (!pre.leq(cls[x], cls[y]) || !pre.leq(cls[y], cls[x]))
                                col.fail_case(
                                    "wall m=" + cstr(m) + " n=" + std::to_string(n) +
                                    " pair " +
                                    multipartition_str(bp.items[static_cast<size_t>(cls[x])]) +
                                    " / " +
                                    multipartition_str(bp.items[static_cast<size_t>(cls[y])]) +
                                    " not mutually reachable");
                            col.add(1);
                        }
                }
            });
    run_tasks(tasks, opt.jobs, col);
}

void suite_blocks_regular_singleton(const VerifyOptions& opt, VerifyReport& rep,
                                    Collector& col) {
    rep.grid = "l=2 fixed, off-wall weights {(9/10,0),(1/2,0),(1/3,0)}, n <= max_n; "
               "every block is a singleton";
    std::vector<Charge> ms = {{Rat(9, 10), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(1, 3), Rat(0)}};
    std::vector<std::function<void()>> tasks;
    for (const Charge& m : ms)
        for (long long n = 0; n <= opt.max_n; ++n)
            tasks.push_back([m, n, &col] {
                std::vector<Multipartition> ground = enumerate_multipartitions(2, n);
                int S = ground_size(ground, m);
                BlockPartition bp = cm_blocks_l2(n, m, S);
                if (bp.classes.size() != ground.size())
                    col.fail_case("m=" + cstr(m) + " n=" + std::to_string(n) + " " +
                                  std::to_string(bp.classes.size()) + " blocks for " +
                                  std::to_string(ground.size()) + " multipartitions");
                for (size_t c = 0; c < bp.classes.size(); ++c)
                    if (bp.classes[c].size() != 1)
                        col.fail_case("m=" + cstr(m) + " n=" + std::to_string(n) +
                                      " non-singleton block " +
                                      bp.class_label(static_cast<int>(c)));
                col.add(static_cast<long long>(ground.size()));
            });
    run_tasks(tasks, opt.jobs, col);
}

void suite_s_stability(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.report_only = true;
    rep.grid = "l=2 fixed, weights {(0,0),(1,0),(2,0),(1/2,0),(9/10,0)}, n <= max_n; "
               "reports whether the block partition changes between sizes S, S+1, S+2";
    std::vector<Charge> ms = {{Rat(0), Rat(0)},
                              {Rat(1), Rat(0)},
                              {Rat(2), Rat(0)},
                              {Rat(1, 2), Rat(0)},
                              {Rat(9, 10), Rat(0)}};
    std::vector<std::function<void()>> tasks;
    for (const Charge& m : ms)
        for (long long n = 0; n <= opt.max_n; ++n)
            tasks.push_back([m, n, &col] {
                std::vector<Multipartition> ground = enumerate_multipartitions(2, n);
                int S = ground_size(ground, m);
                BlockPartition ref = cm_blocks_l2(n, m, S);
                for (int d = 1; d <= 2; ++d) {
                    BlockPartition other = cm_blocks_l2(n, m, S + d);
                    if (other.classes != ref.classes)
                        col.note("m=" + cstr(m) + " n=" + std::to_string(n) +
                                 " partition differs between sizes " + std::to_string(S) +
                                 " and " + std::to_string(S + d));
                    col.add(1);
                }
            });
    run_tasks(tasks, opt.jobs, col);
}

void suite_jclass_vs_kappa(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.report_only = true;
    rep.grid = "l=2 fixed, charges (k,-k) for k in [-2,2], J in {{0},{1}}, n <= max_n; "
               "reports which kappa-wall partitions m=(d,0) the heart classes match";
    std::vector<std::function<void()>> tasks;
    for (long long n = 0; n <= opt.max_n; ++n)
        tasks.push_back([n, &col] {
            std::vector<Multipartition> ground = enumerate_multipartitions(2, n);
            std::vector<std::pair<long long, BlockPartition>> walls;
            for (long long d = -2; d <= 2; ++d) {
                Charge m = {Rat(d), Rat(0)};
                walls.emplace_back(d, cm_blocks_l2(n, m, ground_size(ground, m)));
            }
            for (long long k = -2; k <= 2; ++k) {
                Charge s = {Rat(k), Rat(-k)};
                for (int j = 0; j <= 1; ++j) {
                    BlockPartition jp = cm_blocks_jclass(2, n, s, {j});
                    std::string matches;
                    for (const auto& wp : walls)
                        if (jp.classes == wp.second.classes)
                            matches += (matches.empty() ? "" : ",") + std::to_string(wp.first);
                    col.note("n=" + std::to_string(n) + " s=" + cstr(s) + " J={" +
                             std::to_string(j) + "}: " +
                             (matches.empty() ? std::string("no kappa-wall match")
                                              : "matches m=(d,0) for d in {" + matches + "}"));
                    col.add(1);
                }
            }
        });
    run_tasks(tasks, opt.jobs, col);
    std::sort(col.notes.begin(), col.notes.end());
}

void suite_glen_counts(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "(l,e) in {(2,2),(3,3)} plus e=1 controls (or --l/--e), n <= max_n; label "
               "census, known counts, and block count law on rotation-stable partitions";
    std::vector<std::pair<int, int>> le;
    if (opt.l != 0)
        le.push_back({opt.l, opt.e != 0 ? opt.e : opt.l});
    else
        le = {{2, 2}, {3, 3}};
    std::map<std::tuple<int, int, long long>, long long> frozen = {
        {{2, 2, 1}, 1}, {{2, 2, 2}, 4},  {{2, 2, 3}, 5}, {{2, 2, 4}, 13},
        {{3, 3, 1}, 1}, {{3, 3, 2}, 3},  {{3, 3, 3}, 10}};
    std::vector<std::function<void()>> tasks;
    for (auto [l, e] : le)
        for (long long n = 0; n <= opt.max_n; ++n)
            tasks.push_back([l = l, e = e, n, &frozen, &col] {
                std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
                std::vector<GlenLabel> labels = irr_glen_labels(l, e, n);
                long long stabsq = 0;
                for (const Multipartition& mp : ground) {
                    long long st = stabilizer_order(mp, e);
                    stabsq += st * st;
                }
                if (stabsq % e != 0 ||
                    static_cast<long long>(labels.size()) != stabsq / e)
                    col.fail_case("l=" + std::to_string(l) + " e=" + std::to_string(e) +
                                  " n=" + std::to_string(n) + " label count " +
                                  std::to_string(labels.size()) + " != census " +
                                  std::to_string(stabsq) + "/" + std::to_string(e));
                auto fz = frozen.find({l, e, n});
                if (fz != frozen.end() &&
                    static_cast<long long>(labels.size()) != fz->second)
                    col.fail_case("l=" + std::to_string(l) + " e=" + std::to_string(e) +
                                  " n=" + std::to_string(n) + " label count " +
                                  std::to_string(labels.size()) + " != known " +
                                  std::to_string(fz->second));
                col.add(2);

                // singleton blocks: classes must partition the labels, with one
                // class per rotation orbit except that rotation-fixed stuttering
                // multipartitions split into one class per label
                BlockPartition reg = cm_blocks_regular(l, n);
                GlenBlocks gb = glen_blocks(l, e, n, reg);
                size_t expected_classes = 0;
                std::set<Multipartition> seen;
                for (const Multipartition& mp : ground) {
                    if (seen.count(mp)) continue;
                    Multipartition cur = mp;
                    do {
                        seen.insert(cur);
                        cur = rotate_components(cur, e);
                    } while (cur != mp);
                    int st = stabilizer_order(mp, e);
                    expected_classes += (st == e && e > 1) ? static_cast<size_t>(st) : 1;
                }
                std::set<int> used;
                size_t covered = 0;
                for (const auto& cls : gb.classes) {
                    covered += cls.size();
                    for (int i : cls) used.insert(i);
                }
                if (used.size() != labels.size() || covered != labels.size() ||
                    gb.classes.size() != expected_classes)
                    col.fail_case("l=" + std::to_string(l) + " e=" + std::to_string(e) +
                                  " n=" + std::to_string(n) +
                                  " singleton-block class census mismatch (" +
                                  std::to_string(gb.classes.size()) + " classes, expected " +
                                  std::to_string(expected_classes) + ")");
                for (size_t c = 0; c < gb.classes.size(); ++c) {
                    bool should_split = gb.classes[c].size() == 1 &&
                                        gb.split[c] != 0;
                    if (gb.split[c] && !should_split)
                        col.fail_case("split flag on non-singleton class " +
                                      gb.class_label(static_cast<int>(c)));
                    if (gb.split[c]) {
                        const GlenLabel& lb =
                            gb.items[static_cast<size_t>(gb.classes[c][0])];
                        if (!is_stuttering(lb.rep, e))
                            col.fail_case("split class on non-stuttering " +
                                          lb.to_string());
                    }
                }
                col.add(2);

                // e = 1 control: nothing merges or splits
                std::vector<GlenLabel> triv = irr_glen_labels(l, 1, n);
                GlenBlocks gb1 = glen_blocks(l, 1, n, reg);
                if (triv.size() != ground.size() || gb1.classes.size() != reg.classes.size())
                    col.fail_case("l=" + std::to_string(l) + " n=" + std::to_string(n) +
                                  " e=1 control failed");
                col.add(1);

                // rotation-symmetric kappa blocks at level 2: count law
                if (l == 2 && e == 2) {
                    Charge m = {Rat(0), Rat(0)};
                    BlockPartition wb = cm_blocks_l2(n, m, ground_size(ground, m));
                    GlenBlocks gk = glen_blocks(2, 2, n, wb);
                    // independent expected count: one class per block orbit, except
                    // fixed singleton stuttering blocks contribute their stabilizer
                    std::map<Multipartition, int> pos;
                    for (size_t i = 0; i < wb.items.size(); ++i)
                        pos[wb.items[i]] = static_cast<int>(i);
                    std::vector<int> owner(wb.items.size());
                    for (size_t c = 0; c < wb.classes.size(); ++c)
                        for (int i : wb.classes[c]) owner[static_cast<size_t>(i)] =
                            static_cast<int>(c);
                    std::set<std::set<int>> orbits;
                    for (size_t c = 0; c < wb.classes.size(); ++c) {
                        std::set<int> orb;
                        int cur = static_cast<int>(c);
                        while (!orb.count(cur)) {
                            orb.insert(cur);
                            int img = owner[static_cast<size_t>(
                                pos[rotate_components(
                                    wb.items[static_cast<size_t>(
                                        wb.classes[static_cast<size_t>(cur)][0])],
                                    e)])];
                            cur = img;
                        }
                        orbits.insert(orb);
                    }
                    size_t expected = 0;
                    for (const std::set<int>& orb : orbits) {
                        if (orb.size() == 1) {
                            const std::vector<int>& cls =
                                wb.classes[static_cast<size_t>(*orb.begin())];
                            if (cls.size() == 1 &&
                                is_stuttering(wb.items[static_cast<size_t>(cls[0])], e)) {
                                expected += static_cast<size_t>(stabilizer_order(
                                    wb.items[static_cast<size_t>(cls[0])], e));
                                continue;
                            }
                        }
                        expected += 1;
                    }
                    if (gk.classes.size() != expected)
                        col.fail_case("n=" + std::to_string(n) +
                                      " symmetric kappa blocks: " +
                                      std::to_string(gk.classes.size()) +
                                      " classes, expected " + std::to_string(expected));
                    col.add(1);
                }
            });
    run_tasks(tasks, opt.jobs, col);
}

void suite_poset_quotient(const VerifyOptions& opt, VerifyReport& rep, Collector& col) {
    rep.grid = "200 seeded random posets doubled under a two-element action, quotient "
               "laws, Hasse round-trips, and nested quotients by C2 then C3 vs C6";
    std::vector<std::function<void()>> tasks;
    for (int iter = 0; iter < 200; ++iter)
        tasks.push_back([iter, seed = opt.seed, &col] {
            std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<unsigned long long>(iter + 1));
            int k = 3 + iter % 6;
            auto coin = [&rng](int num, int den) {
                return static_cast<int>(rng() % static_cast<unsigned>(den)) < num;
            };
            std::vector<std::pair<int, int>> base;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (coin(1, 3)) base.emplace_back(i, j);

            std::vector<std::string> labels;
            for (int i = 0; i < 2 * k; ++i) labels.push_back("x" + std::to_string(i));
            std::vector<std::pair<int, int>> pairs;
            for (auto [i, j] : base) {
                pairs.emplace_back(i, j);
                pairs.emplace_back(i + k, j + k);
            }
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (coin(1, 4)) {
                        pairs.emplace_back(i, j + k);
                        pairs.emplace_back(i + k, j);
                    }
            FinitePoset p = FinitePoset::from_pairs(labels, pairs);

            GroupAction act;
            act.table = {{0, 1}, {1, 0}};
            act.act.assign(2, std::vector<int>(static_cast<size_t>(2 * k)));
            for (int x = 0; x < 2 * k; ++x) {
                act.act[0][static_cast<size_t>(x)] = x;
                act.act[1][static_cast<size_t>(x)] = (x + k) % (2 * k);
            }
            validate_action(act, 2 * k);
            FinitePoset q = quotient_by_group(p, act);
            std::string where = "iter=" + std::to_string(iter);
            if (q.size() != k) col.fail_case(where + " quotient size " + std::to_string(q.size()));
            auto orb = [k](int x) { return x % k; };
            for (int x = 0; x < 2 * k; ++x)
                for (int y = 0; y < 2 * k; ++y)
                    if (p.leq(x, y) && !q.leq(orb(x), orb(y)))
                        col.fail_case(where + " projection not monotone");
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    // with an equivariant action the one-step existential rule is
                    // already transitive, so the closed quotient must equal it
                    bool exist = false;
                    for (int x : {a, a + k})
                        for (int y : {b, b + k})
                            if (p.leq(x, y)) exist = true;
                    if (q.leq(a, b) != exist)
                        col.fail_case(where + " quotient relation differs from the "
                                              "existential rule at (" +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
                }
            if (p.antisymmetric()) {
                FinitePoset back = FinitePoset::from_pairs(p.labels(), p.hasse());
                if (!back.same_relation(p)) col.fail_case(where + " hasse round-trip (base)");
            }
            if (q.antisymmetric()) {
                FinitePoset back = FinitePoset::from_pairs(q.labels(), q.hasse());
                if (!back.same_relation(q)) col.fail_case(where + " hasse round-trip (quotient)");
            }
            col.add(4);

            if (iter % 10 == 0) {
                // six copies rotated by C6; quotient directly and in stages
                int n6 = 6 * k;
                std::vector<std::string> l6;
                for (int i = 0; i < n6; ++i) l6.push_back("y" + std::to_string(i));
                std::vector<std::pair<int, int>> p6;
                for (auto [i, j] : base)
                    for (int c = 0; c < 6; ++c) p6.emplace_back(c * k + i, c * k + j);
                FinitePoset big = FinitePoset::from_pairs(l6, p6);
                GroupAction a6;
                a6.table.assign(6, std::vector<int>(6));
                for (int g = 0; g < 6; ++g)
                    for (int h = 0; h < 6; ++h) a6.table[static_cast<size_t>(g)][static_cast<size_t>(h)] = (g + h) % 6;
                a6.act.assign(6, std::vector<int>(static_cast<size_t>(n6)));
                for (int g = 0; g < 6; ++g)
                    for (int c = 0; c < 6; ++c)
                        for (int x = 0; x < k; ++x)
                            a6.act[static_cast<size_t>(g)][static_cast<size_t>(c * k + x)] =
                                ((c + g) % 6) * k + x;
                FinitePoset q6 = quotient_by_group(big, a6);

                GroupAction a2;
                a2.table = {{0, 1}, {1, 0}};
                a2.act.assign(2, std::vector<int>(static_cast<size_t>(n6)));
                for (int x = 0; x < n6; ++x) {
                    a2.act[0][static_cast<size_t>(x)] = x;
                    a2.act[1][static_cast<size_t>(x)] = a6.act[3][static_cast<size_t>(x)];
                }
                FinitePoset q2 = quotient_by_group(big, a2);
                GroupAction a3;
                a3.table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
                a3.act.assign(3, std::vector<int>(static_cast<size_t>(3 * k)));
                for (int c = 0; c < 3; ++c)
                    for (int x = 0; x < k; ++x) {
                        a3.act[0][static_cast<size_t>(c * k + x)] = c * k + x;
                        a3.act[1][static_cast<size_t>(c * k + x)] = ((c + 1) % 3) * k + x;
                        a3.act[2][static_cast<size_t>(c * k + x)] = ((c + 2) % 3) * k + x;
                    }
                FinitePoset q23 = quotient_by_group(q2, a3);
                bool same = q23.size() == q6.size();
                for (int a = 0; same && a < q6.size(); ++a)
                    for (int b = 0; b < q6.size(); ++b)
                        if (q23.leq(a, b) != q6.leq(a, b)) {
                            same = false;
                            break;
                        }
                if (!same) col.fail_case(where + " staged C2*C3 quotient differs from C6");
                col.add(1);
            }
        });
    run_tasks(tasks, opt.jobs, col);
}

using SuiteFn = void (*)(const VerifyOptions&, VerifyReport&, Collector&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"thm-kappa-tau", suite_thm_kappa_tau},
        {"thm-kappa-N", suite_thm_kappa_n},
        {"thm-kappa-a", suite_thm_kappa_a},
        {"tau-roundtrip", suite_tau_roundtrip},
        {"tau-equivariance", suite_tau_equivariance},
        {"tau-transpose", suite_tau_transpose},
        {"kappa-sum-const", suite_kappa_sum_const},
        {"kappa-equivariance", suite_kappa_equivariance},
        {"adjacent-swap-N", suite_adjacent_swap_n},
        {"alcove-kappa-dict", suite_alcove_kappa_dict},
        {"lemma-halfstep", suite_lemma_halfstep},
        {"blocks-zigzag", suite_blocks_zigzag},
        {"blocks-regular-singleton", suite_blocks_regular_singleton},
        {"s-stability", suite_s_stability},
        {"jclass-vs-kappa", suite_jclass_vs_kappa},
        {"glen-counts", suite_glen_counts},
        {"poset-quotient", suite_poset_quotient},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& kv : suite_table()) out.push_back(kv.first);
        return out;
    }();
    return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    const SuiteFn* fn = nullptr;
    for (const auto& kv : suite_table())
        if (kv.first == suite) fn = &kv.second;
    if (!fn) fail("UnknownSuite", "no suite named '" + suite + "'");
    VerifyReport rep;
    rep.suite = suite;
    Collector col;
    auto start = std::chrono::steady_clock::now();
    (*fn)(opt, rep, col);
    auto stop = std::chrono::steady_clock::now();
    rep.cases = col.cases.load();
    rep.counterexamples = std::move(col.bad);
    rep.notes = std::move(col.notes);
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    std::sort(rep.notes.begin(), rep.notes.end());
    rep.elapsed_sec = std::chrono::duration<double>(stop - start).count();
    return rep;
}

}  // namespace mpsym
