#include "mpsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mpsym/afunction.hpp"
#include "mpsym/blocks.hpp"
#include "mpsym/error.hpp"
#include "mpsym/orders.hpp"
#include "mpsym/params.hpp"
#include "mpsym/partition.hpp"
#include "mpsym/poset.hpp"
#include "mpsym/symbols.hpp"
#include "mpsym/tau.hpp"
#include "mpsym/verify.hpp"

namespace mpsym {
namespace {

using nlohmann::json;

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

Partition parse_partition_arg(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw usage_error("partition must be a JSON array like [3,2]: " + std::string(e.what()));
    }
    if (!j.is_array()) throw usage_error("partition must be a JSON array like [3,2]");
    Partition p;
    for (const json& v : j) {
        if (!v.is_number_integer()) throw usage_error("partition entries must be integers");
        p.push_back(v.get<long long>());
    }
    if (!is_partition(p))
        throw usage_error("entries must be weakly decreasing positive integers");
    return p;
}

Multipartition parse_multipartition_arg(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw usage_error("multipartition must be JSON like [[3,2],[]]: " +
                          std::string(e.what()));
    }
    if (!j.is_array() || j.empty())
        throw usage_error("multipartition must be a nonempty JSON array of arrays");
    Multipartition mp;
    for (const json& comp : j) {
        if (!comp.is_array())
            throw usage_error("multipartition components must be arrays");
        Partition p;
        for (const json& v : comp) {
            if (!v.is_number_integer())
                throw usage_error("partition entries must be integers");
            p.push_back(v.get<long long>());
        }
        if (!is_partition(p))
            throw usage_error("component entries must be weakly decreasing positive integers");
        mp.push_back(std::move(p));
    }
    return mp;
}

std::vector<Rat> parse_rats_arg(const std::string& text, const char* what) {
    try {
        return parse_rat_list(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string(what) + ": " + e.what());
    }
}

Permutation parse_perm_arg(const std::string& text, int l) {
    Permutation w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            w.img.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw usage_error("--w must be the one-line images, e.g. \"2,1\"");
        }
    }
    if (w.level() != l) throw usage_error("--w must list images of 1.." + std::to_string(l));
    std::vector<char> seen(static_cast<size_t>(l), 0);
    for (int v : w.img) {
        if (v < 1 || v > l || seen[static_cast<size_t>(v - 1)])
            throw usage_error("--w must be a permutation of 1.." + std::to_string(l));
        seen[static_cast<size_t>(v - 1)] = 1;
    }
    return w;
}

Sign parse_sign_arg(const std::string& text) {
    if (text == "+" || text == "plus") return Sign::Plus;
    if (text == "-" || text == "minus") return Sign::Minus;
    throw usage_error("--sign must be + or -");
}

std::set<int> parse_residues_arg(const std::string& text, int l) {
    std::set<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw usage_error("--j must be comma separated residues mod l");
        }
        if (v < 0 || v >= l) throw usage_error("--j residues must lie in 0..l-1");
        out.insert(v);
    }
    return out;
}

// the coupling list (h, H_1, ..., H_{l-1})
ParamH parse_h_arg(const std::string& text) {
    std::vector<Rat> xs = parse_rats_arg(text, "--h");
    if (xs.size() < 2) throw usage_error("--h needs h followed by H_1..H_{l-1}");
    ParamH p;
    p.h = xs[0];
    p.H.assign(xs.begin() + 1, xs.end());
    return p;
}

json rats_json(const std::vector<Rat>& xs) {
    json arr = json::array();
    for (const Rat& x : xs) arr.push_back(rat_str(x));
    return arr;
}

json partition_json(const Partition& p) {
    json arr = json::array();
    for (long long v : p) arr.push_back(v);
    return arr;
}

json multipartition_json(const Multipartition& mp) {
    json arr = json::array();
    for (const Partition& p : mp) arr.push_back(partition_json(p));
    return arr;
}

void check_level(int given, size_t observed, const char* what) {
    if (given != 0 && static_cast<size_t>(given) != observed)
        throw usage_error(std::string("--l disagrees with the ") + what);
}

void check_total(long long given, const Multipartition& mp) {
    if (given >= 0 && given != total_weight(mp))
        throw usage_error("--n disagrees with the total size of --lambda");
}

int symbol_size(int requested, const Multipartition& mp, const std::vector<Rat>& m) {
    return requested > 0 ? requested : min_size(mp, m);
}

// shared scratch for option values; only the ones a subcommand registered are read
struct Opts {
    bool emit_json = false;
    unsigned long long seed = VerifyOptions{}.seed;
    int jobs = 0;
    long long max_n = 4;
    int l = 0;
    int e = 0;

    long long n = -1;
    int s_size = 0;
    std::string m, charge, lambda, mu, rho, theta, h, w, j, a, b, r, suite;
    std::string sign = "+";
    std::string format = "dot";
};

void print_block_partition(const BlockPartition& bp, const Opts& o, std::ostream& out) {
    if (o.emit_json) {
        json classes = json::array();
        for (size_t c = 0; c < bp.classes.size(); ++c) {
            json cls = json::array();
            for (int i : bp.classes[c]) cls.push_back(bp.item_label(i));
            classes.push_back(cls);
        }
        out << json{{"classes", classes}}.dump(2) << "\n";
        return;
    }
    for (size_t c = 0; c < bp.classes.size(); ++c)
        out << bp.class_label(static_cast<int>(c)) << "\n";
}

// alcove from either --theta (l=2 classification) or the (--s,--w,--sign) datum
Alcove alcove_from_opts(const Opts& o, CLI::Option* theta_opt) {
    if (theta_opt->count() > 0) {
        ParamTheta t{parse_rats_arg(o.theta, "--theta")};
        check_level(o.l, t.theta.size(), "length of --theta");
        L2Class cls = classify_theta_l2(t);
        if (cls.kind != L2Class::AlcoveK)
            fail("OnWall", "theta lies on a wall or the degenerate locus: " + cls.to_string());
        return l2_alcove(cls.index, cls.sign);
    }
    if (o.charge.empty()) throw usage_error("give either --theta or --s/--w/--sign");
    Charge s = parse_rats_arg(o.charge, "--s");
    check_level(o.l, s.size(), "length of --s");
    int l = static_cast<int>(s.size());
    Permutation w = o.w.empty() ? Permutation::identity(l) : parse_perm_arg(o.w, l);
    return Alcove{s, w, parse_sign_arg(o.sign)};
}

int blocks_symbol_size(const std::vector<Rat>& m, long long n) {
    int s = 1;
    for (const Multipartition& mp : enumerate_multipartitions(static_cast<int>(m.size()), n))
        s = std::max(s, min_size(mp, m));
    return s;
}

void run_verify(const Opts& o, std::ostream& out, int& rc) {
    VerifyOptions vo;
    vo.l = o.l;
    vo.e = o.e;
    vo.max_n = o.max_n;
    vo.seed = o.seed;
    vo.jobs = o.jobs;
    VerifyReport rep = run_suite(o.suite, vo);
    if (o.emit_json) {
        json j{{"suite", rep.suite},
               {"grid", rep.grid},
               {"cases", rep.cases},
               {"counterexamples", rep.counterexamples},
               {"notes", rep.notes},
               {"elapsed_sec", rep.elapsed_sec},
               {"report_only", rep.report_only},
               {"passed", rep.passed()}};
        out << j.dump(2) << "\n";
    } else {
        out << "suite: " << rep.suite << "\n";
        out << "grid: " << rep.grid << "\n";
        out << "cases: " << rep.cases << "\n";
        std::ostringstream el;
        el << std::fixed << std::setprecision(2) << rep.elapsed_sec;
        out << "elapsed: " << el.str() << "s\n";
        out << "counterexamples: " << rep.counterexamples.size() << "\n";
        for (const std::string& c : rep.counterexamples) out << "  " << c << "\n";
        if (!rep.notes.empty()) {
            out << "notes: " << rep.notes.size() << "\n";
            for (const std::string& nline : rep.notes) out << "  " << nline << "\n";
        }
        out << (rep.passed() ? "PASS" : "FAIL") << "\n";
    }
    rc = rep.passed() ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics of charged multipartitions: shifted symbols, "
                 "kappa sequences, the charged bijection, alcove orders, a/c "
                 "comparisons, block partitions, and a verification harness"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h; --h is a coupling list

    Opts o;
    int rc = 0;
    app.add_flag("--json", o.emit_json, "emit JSON instead of plain text");
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
    app.add_option("--max-n", o.max_n, "largest n in verification grids");
    app.add_option("--l", o.l, "level (number of components)");
    app.add_option("--e", o.e, "index of the cyclic subgroup quotient");

    auto add_sub = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    CLI::App* sym = add_sub("symbol", "shifted symbol rows of a multipartition");
    sym->add_option("--m", o.m, "weights, comma separated rationals")->required();
    sym->add_option("--s", o.s_size, "symbol size (default: smallest valid)");
    sym->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
    sym->add_option("--n", o.n, "expected total size, checked when given");
    sym->callback([&] {
        Multipartition mp = parse_multipartition_arg(o.lambda);
        std::vector<Rat> m = parse_rats_arg(o.m, "--m");
        check_level(o.l, mp.size(), "number of components of --lambda");
        if (m.size() != mp.size()) throw usage_error("--m and --lambda must have equal length");
        check_total(o.n, mp);
        Symbol sb = shifted_symbol(mp, m, symbol_size(o.s_size, mp, m));
        if (o.emit_json) {
            json rows = json::array();
            for (const auto& row : sb.rows) rows.push_back(rats_json(row));
            out << json{{"m", rats_json(sb.m)}, {"s", sb.s}, {"rows", rows}}.dump(2) << "\n";
        } else {
            for (const auto& row : sb.rows) out << rat_seq_str(row) << "\n";
        }
    });

    CLI::App* kap = add_sub("kappa", "merged decreasing symbol entries");
    kap->add_option("--m", o.m, "weights, comma separated rationals")->required();
    kap->add_option("--s", o.s_size, "symbol size (default: smallest valid)");
    kap->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
    kap->add_option("--n", o.n, "expected total size, checked when given");
    kap->callback([&] {
        Multipartition mp = parse_multipartition_arg(o.lambda);
        std::vector<Rat> m = parse_rats_arg(o.m, "--m");
        check_level(o.l, mp.size(), "number of components of --lambda");
        if (m.size() != mp.size()) throw usage_error("--m and --lambda must have equal length");
        check_total(o.n, mp);
        std::vector<Rat> k = kappa(mp, m, symbol_size(o.s_size, mp, m));
        if (o.emit_json)
            out << json{{"kappa", rats_json(k)}}.dump(2) << "\n";
        else
            out << rat_seq_str(k) << "\n";
    });

    CLI::App* nv = add_sub("nvalue", "N-function of a multipartition");
    nv->add_option("--m", o.m, "weights, comma separated rationals")->required();
    nv->add_option("--s", o.s_size, "symbol size (default: smallest valid)");
    nv->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
    nv->add_option("--n", o.n, "expected total size, checked when given");
    nv->callback([&] {
        Multipartition mp = parse_multipartition_arg(o.lambda);
        std::vector<Rat> m = parse_rats_arg(o.m, "--m");
        check_level(o.l, mp.size(), "number of components of --lambda");
        if (m.size() != mp.size()) throw usage_error("--m and --lambda must have equal length");
        check_total(o.n, mp);
        Rat v = n_value(mp, m, symbol_size(o.s_size, mp, m));
        if (o.emit_json)
            out << json{{"N", rat_str(v)}}.dump(2) << "\n";
        else
            out << rat_str(v) << "\n";
    });

    CLI::App* kc = add_sub("kcompare", "dominance verdict between two kappa sequences");
    kc->add_option("--m", o.m, "weights, comma separated rationals")->required();
    kc->add_option("--s", o.s_size, "symbol size (default: smallest valid for the pair)");
    kc->add_option("--lambda", o.lambda, "first multipartition as JSON")->required();
    kc->add_option("--mu", o.mu, "second multipartition as JSON")->required();
    kc->callback([&] {
        Multipartition a = parse_multipartition_arg(o.lambda);
        Multipartition b = parse_multipartition_arg(o.mu);
        std::vector<Rat> m = parse_rats_arg(o.m, "--m");
        check_level(o.l, a.size(), "number of components of --lambda");
        if (a.size() != b.size()) throw usage_error("--lambda and --mu must have equal level");
        if (m.size() != a.size()) throw usage_error("--m and --lambda must have equal length");
        int s = o.s_size > 0 ? o.s_size : std::max(min_size(a, m), min_size(b, m));
        Verdict v = kappa_compare(a, b, m, s);
        if (o.emit_json)
            out << json{{"verdict", verdict_name(v)}}.dump(2) << "\n";
        else
            out << verdict_name(v) << "\n";
    });

    CLI::App* tu = add_sub("tau", "charged bijection to a single partition");
    tu->add_option("--s", o.charge, "charge, comma separated rationals")->required();
    tu->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
    tu->callback([&] {
        Multipartition mp = parse_multipartition_arg(o.lambda);
        Charge s = parse_rats_arg(o.charge, "--s");
        check_level(o.l, mp.size(), "number of components of --lambda");
        if (s.size() != mp.size()) throw usage_error("--s and --lambda must have equal length");
        Partition rho = tau(s, mp);
        if (o.emit_json)
            out << json{{"rho", partition_json(rho)}}.dump(2) << "\n";
        else
            out << partition_str(rho) << "\n";
    });

    CLI::App* ti = add_sub("tauinv", "inverse of the charged bijection at integer charges");
    ti->add_option("--rho", o.rho, "partition as JSON")->required();
    ti->callback([&] {
        if (o.l == 0) throw usage_error("tauinv needs --l");
        Partition rho = parse_partition_arg(o.rho);
        auto [s, mp] = tau_inverse(o.l, rho);
        if (o.emit_json)
            out << json{{"s", rats_json(s)}, {"lambda", multipartition_json(mp)}}.dump(2)
                << "\n";
        else
            out << "s: " << rat_seq_str(s) << "\nlambda: " << multipartition_str(mp) << "\n";
    });

    CLI::App* co = add_sub("core", "core partition attached to an integer charge");
    co->add_option("--s", o.charge, "charge, comma separated integers")->required();
    co->callback([&] {
        Charge s = parse_rats_arg(o.charge, "--s");
        check_level(o.l, s.size(), "length of --s");
        Partition c = ell_core(s);
        if (o.emit_json)
            out << json{{"core", partition_json(c)}}.dump(2) << "\n";
        else
            out << partition_str(c) << "\n";
    });

    CLI::App* jh = add_sub("jheart", "remove boxes with residues in J until none remain");
    jh->add_option("--rho", o.rho, "partition as JSON")->required();
    jh->add_option("--j", o.j, "comma separated residues mod l")->required();
    jh->callback([&] {
        if (o.l == 0) throw usage_error("jheart needs --l");
        Partition rho = parse_partition_arg(o.rho);
        Partition h = j_heart(rho, o.l, parse_residues_arg(o.j, o.l));
        if (o.emit_json)
            out << json{{"heart", partition_json(h)}}.dump(2) << "\n";
        else
            out << partition_str(h) << "\n";
    });

    CLI::App* cl = add_sub("classify", "locate a level-2 parameter among alcoves and walls");
    cl->add_option("--theta", o.theta, "theta, comma separated rationals")->required();
    cl->callback([&] {
        ParamTheta t{parse_rats_arg(o.theta, "--theta")};
        check_level(o.l, t.theta.size(), "length of --theta");
        L2Class c = classify_theta_l2(t);
        if (o.emit_json) {
            const char* kind = c.kind == L2Class::AlcoveK
                                   ? "alcove"
                                   : (c.kind == L2Class::WallK ? "wall" : "degenerate");
            json j{{"kind", kind}};
            if (c.kind != L2Class::DegenerateK) {
                j["index"] = c.index;
                j["sign"] = std::string(1, sign_char(c.sign));
            }
            out << j.dump(2) << "\n";
        } else {
            out << c.to_string() << "\n";
        }
    });

    CLI::App* wl = add_sub("walls", "hyperplanes from the wall list that a parameter hits");
    wl->add_option("--h", o.h, "coupling list h,H_1,..,H_{l-1}")->required();
    wl->add_option("--n", o.n, "rank bound for the wall list")->required();
    wl->callback([&] {
        ParamH p = parse_h_arg(o.h);
        check_level(o.l, p.H.size() + 1, "length of --h");
        std::vector<WallHit> hits = git_walls(p, o.n);
        if (o.emit_json) {
            json arr = json::array();
            for (const WallHit& w : hits) {
                if (w.h_wall)
                    arr.push_back(json{{"h_wall", true}});
                else
                    arr.push_back(json{{"i", w.i}, {"j", w.j}, {"m", w.mcoef}});
            }
            out << json{{"regular", hits.empty()}, {"walls", arr}}.dump(2) << "\n";
        } else if (hits.empty()) {
            out << "regular\n";
        } else {
            for (const WallHit& w : hits) out << w.to_string() << "\n";
        }
    });

    CLI::App* ar = add_sub("alcoverep", "displayed regular representative of an alcove");
    ar->add_option("--s", o.charge, "integer charge, comma separated")->required();
    ar->add_option("--w", o.w, "permutation one-line images (default identity)");
    ar->add_option("--sign", o.sign, "+ or - (default +)");
    ar->callback([&] {
        Charge s = parse_rats_arg(o.charge, "--s");
        check_level(o.l, s.size(), "length of --s");
        int l = static_cast<int>(s.size());
        Permutation w = o.w.empty() ? Permutation::identity(l) : parse_perm_arg(o.w, l);
        ParamTheta t = alcove_rep(Alcove{s, w, parse_sign_arg(o.sign)});
        if (o.emit_json)
            out << json{{"theta", rats_json(t.theta)}}.dump(2) << "\n";
        else
            out << rat_seq_str(t.theta) << "\n";
    });

    CLI::App* od = add_sub("order", "combinatorial order between two multipartitions");
    CLI::Option* od_theta = od->add_option("--theta", o.theta, "level-2 parameter");
    od->add_option("--s", o.charge, "alcove charge (with --w/--sign) instead of --theta");
    od->add_option("--w", o.w, "alcove permutation one-line images");
    od->add_option("--sign", o.sign, "alcove sign, + or -");
    od->add_option("--a", o.a, "first multipartition as JSON")->required();
    od->add_option("--b", o.b, "second multipartition as JSON")->required();
    od->callback([&] {
        Multipartition a = parse_multipartition_arg(o.a);
        Multipartition b = parse_multipartition_arg(o.b);
        if (a.size() != b.size()) throw usage_error("--a and --b must have equal level");
        check_level(o.l, a.size(), "number of components of --a");
        Alcove al = alcove_from_opts(o, od_theta);
        if (al.s.size() != a.size())
            throw usage_error("alcove level disagrees with the multipartitions");
        Verdict v = comb_order(al, a, b);
        if (o.emit_json)
            out << json{{"verdict", verdict_name(v)}}.dump(2) << "\n";
        else
            out << verdict_name(v) << "\n";
    });

    CLI::App* hs = add_sub("hasse", "combinatorial order on all multipartitions of n");
    CLI::Option* hs_theta = hs->add_option("--theta", o.theta, "level-2 parameter");
    hs->add_option("--s", o.charge, "alcove charge (with --w/--sign) instead of --theta");
    hs->add_option("--w", o.w, "alcove permutation one-line images");
    hs->add_option("--sign", o.sign, "alcove sign, + or -");
    hs->add_option("--n", o.n, "total size")->required();
    hs->add_option("--format", o.format, "dot (default) or pairs")
        ->check(CLI::IsMember({"dot", "pairs"}));
    hs->callback([&] {
        Alcove al = alcove_from_opts(o, hs_theta);
        if (o.l != 0) check_level(o.l, al.s.size(), "alcove level");
        FinitePoset p = order_poset(al, static_cast<int>(al.s.size()), o.n);
        if (o.emit_json) {
            json covers = json::array();
            for (const auto& [x, y] : p.hasse()) covers.push_back(json::array({x, y}));
            out << json{{"nodes", p.labels()}, {"covers", covers}}.dump(2) << "\n";
        } else if (o.format == "dot") {
            out << p.to_dot();
        } else {
            for (const auto& [x, y] : p.hasse())
                out << p.label(x) << " -> " << p.label(y) << "\n";
        }
    });

    CLI::App* af = add_sub("afn", "a-function value of a multipartition");
    af->add_option("--m", o.m, "weights, comma separated rationals")->required();
    af->add_option("--r", o.r, "scalar r as a rational")->required();
    af->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
    af->add_option("--n", o.n, "expected total size, checked when given");
    af->callback([&] {
        Multipartition mp = parse_multipartition_arg(o.lambda);
        std::vector<Rat> m = parse_rats_arg(o.m, "--m");
        check_level(o.l, mp.size(), "number of components of --lambda");
        if (m.size() != mp.size()) throw usage_error("--m and --lambda must have equal length");
        check_total(o.n, mp);
        Rat r;
        try {
            r = parse_rat(o.r);
        } catch (const std::invalid_argument& e) {
            throw usage_error(std::string("--r: ") + e.what());
        }
        Rat v = a_value(mp, AContext{m, r});
        if (o.emit_json)
            out << json{{"a", rat_str(v)}}.dump(2) << "\n";
        else
            out << rat_str(v) << "\n";
    });

    CLI::App* bl = add_sub("blocks", "block partition of the multipartitions of n");
    bl->add_option("--n", o.n, "total size")->required();
    bl->add_option("--m", o.m, "level-2 weights: blocks = equal kappa sequences");
    bl->add_option("--s", o.s_size, "symbol size for --m (default: smallest valid)");
    bl->add_option("--charge", o.charge, "integer charge: blocks = equal J-hearts");
    bl->add_option("--j", o.j, "comma separated residues mod l, with --charge");
    bl->callback([&] {
        if (o.l == 0) throw usage_error("blocks needs --l");
        BlockPartition bp;
        if (!o.m.empty()) {
            if (o.l != 2) fail("WrongLevel", "kappa blocks by weight are a level-2 feature");
            std::vector<Rat> m = parse_rats_arg(o.m, "--m");
            if (m.size() != 2) throw usage_error("--m must have two entries at level 2");
            int s = o.s_size > 0 ? o.s_size : blocks_symbol_size(m, o.n);
            bp = cm_blocks_l2(o.n, m, s);
        } else if (!o.charge.empty()) {
            Charge s = parse_rats_arg(o.charge, "--charge");
            check_level(o.l, s.size(), "length of --charge");
            bp = cm_blocks_jclass(o.l, o.n, s, parse_residues_arg(o.j, o.l));
        } else {
            bp = cm_blocks_regular(o.l, o.n);
        }
        print_block_partition(bp, o, out);
    });

    CLI::App* be = add_sub("blocks-e", "block partition for the index-e subgroup");
    be->add_option("--n", o.n, "total size")->required();
    be->add_option("--h", o.h, "coupling list h,H_1,..,H_{l-1}")->required();
    be->callback([&] {
        if (o.l == 0 || o.e == 0) throw usage_error("blocks-e needs --l and --e");
        ParamH p = parse_h_arg(o.h);
        check_level(o.l, p.H.size() + 1, "length of --h");
        if (o.e < 1 || o.l % o.e != 0)
            fail("BadDivisor", "e must be a positive divisor of l");
        // rotation compatibility H_{j+p} = H_j over the full list including H_0
        int step = o.l / o.e;
        std::vector<Rat> full(static_cast<size_t>(o.l));
        full[0] = p.H0();
        for (int i = 1; i < o.l; ++i) full[static_cast<size_t>(i)] = p.H[static_cast<size_t>(i - 1)];
        for (int i = 0; i < o.l; ++i)
            if (full[static_cast<size_t>(i)] != full[static_cast<size_t>((i + step) % o.l)])
                fail("NotCeStable", "coupling is not invariant under the rotation");
        BlockPartition wb;
        if (o.l == 2) {
            ParamMR mr = h_to_mr(p, Rat(0));
            wb = cm_blocks_l2(o.n, mr.m, blocks_symbol_size(mr.m, o.n));
        } else {
            if (!is_regular(p, o.n))
                fail("OnWall", "blocks above level 2 need a regular coupling");
            wb = cm_blocks_regular(o.l, o.n);
        }
        GlenBlocks gb = glen_blocks(o.l, o.e, o.n, wb);
        if (o.emit_json) {
            json classes = json::array();
            for (size_t c = 0; c < gb.classes.size(); ++c) {
                json labels = json::array();
                for (int i : gb.classes[c])
                    labels.push_back(gb.items[static_cast<size_t>(i)].to_string());
                classes.push_back(json{{"labels", labels},
                                       {"split", gb.split[c] != 0},
                                       {"worbit", gb.worbit_of_class[c]}});
            }
            out << json{{"classes", classes}}.dump(2) << "\n";
        } else {
            for (size_t c = 0; c < gb.classes.size(); ++c)
                out << gb.class_label(static_cast<int>(c))
                    << (gb.split[c] ? " (split)" : "") << "\n";
        }
    });

    CLI::App* vf = add_sub("verify", "run a verification suite over its grid");
    std::string suites_help = "one of:";
    for (const std::string& s : suite_names()) suites_help += " " + s;
    vf->add_option("suite", o.suite, suites_help)->required();
    vf->callback([&] { run_verify(o, out, rc); });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace mpsym
