#include "mpsym/params.hpp"

#include "mpsym/error.hpp"
#include "mpsym/tau.hpp"

namespace mpsym {

Rat ParamH::H0() const {
    Rat sum(0);
    for (const Rat& x : H) sum += x;
    return -sum;
}

Rat ParamTheta::sum() const {
    Rat s(0);
    for (const Rat& x : theta) s += x;
    return s;
}

std::string Alcove::to_string() const {
    std::string out = "alpha((";
    out += rat_seq_str(s);
    out += "),(";
    out += w.to_string();
    out += "),";
    out += sign_char(sign);
    out += ")";
    return out;
}

ParamTheta h_to_theta(const ParamH& p) {
    ParamTheta t;
    t.theta.reserve(p.H.size() + 1);
    t.theta.push_back(-p.h + p.H0());
    for (const Rat& x : p.H) t.theta.push_back(x);
    return t;
}

ParamH theta_to_h(const ParamTheta& t) {
    if (t.level() < 1) fail("WrongLevel", "theta needs at least one component");
    ParamH p;
    p.H.assign(t.theta.begin() + 1, t.theta.end());
    p.h = p.H0() - t.theta[0];
    return p;
}

ParamH mr_to_h(const ParamMR& p) {
    if (p.m.empty()) fail("WrongLevel", "m needs at least one component");
    if (p.r == Rat(0)) fail("ZeroR", "r must be nonzero");
    ParamH out;
    out.h = p.r;
    out.H.reserve(p.m.size() - 1);
    for (size_t i = 1; i < p.m.size(); ++i) out.H.push_back(p.r * (p.m[i] - p.m[i - 1]));
    return out;
}

ParamMR h_to_mr(const ParamH& p, const Rat& normalization) {
    if (p.h == Rat(0)) fail("ZeroR", "h must be nonzero to read off (m, r)");
    ParamMR out;
    out.r = p.h;
    out.m.reserve(p.H.size() + 1);
    out.m.push_back(normalization);
    Rat acc(0);
    for (const Rat& x : p.H) {
        acc += x;
        out.m.push_back(acc / p.h + normalization);
    }
    return out;
}

std::string WallHit::to_string() const {
    if (h_wall) return "h=0";
    return "(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
           ",m=" + std::to_string(mcoef) + ")";
}

std::vector<WallHit> git_walls(const ParamH& p, long long n) {
    std::vector<WallHit> hits;
    if (p.h == Rat(0)) {
        WallHit w;
        w.h_wall = true;
        hits.push_back(w);
    }
    int lm1 = static_cast<int>(p.H.size());
    for (int i = 1; i <= lm1; ++i) {
        Rat acc(0);
        for (int j = i; j <= lm1; ++j) {
            acc += p.H[static_cast<size_t>(j - 1)];
            if (p.h == Rat(0)) {
                if (acc == Rat(0)) hits.push_back(WallHit{false, i, j, 0});
                continue;
            }
            Rat mc = -acc / p.h;
            if (rat_is_integer(mc) && mc.numerator() >= 1 - n && mc.numerator() <= n - 1)
                hits.push_back(WallHit{false, i, j, mc.numerator()});
        }
    }
    return hits;
}

bool is_regular(const ParamH& p, long long n) { return git_walls(p, n).empty(); }

ParamTheta bar_theta(const ParamTheta& t) {
    int l = t.level();
    ParamTheta out;
    out.theta.resize(static_cast<size_t>(l));
    out.theta[0] = -t.theta[0];
    for (int i = 1; i < l; ++i)
        out.theta[static_cast<size_t>(i)] = -t.theta[static_cast<size_t>(l - i)];
    return out;
}

ParamTheta alcove_rep(const Alcove& a) {
    int l = a.w.level();
    if (static_cast<int>(a.s.size()) != l)
        fail("MalformedCharge", "alcove charge length does not match permutation");
    if (!is_integer_charge(a.s))
        fail("MalformedCharge", "alcove charges must be integral");
    check_charge(a.s, l);
    Charge S = act_charge(a.w.inverse(), a.s);
    ParamTheta t;
    t.theta.resize(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) {
        if (a.sign == Sign::Plus) {
            const Rat& cur = S[static_cast<size_t>(i)];
            const Rat& prev = S[static_cast<size_t>((i + l - 1) % l)];
            t.theta[static_cast<size_t>(i)] = Rat(1, l) + cur - prev;
        } else {
            const Rat& cur = S[static_cast<size_t>(l - 1 - i)];
            const Rat& next = S[static_cast<size_t>((l - i) % l)];
            t.theta[static_cast<size_t>(i)] = Rat(-1, l) + cur - next;
        }
    }
    return t;
}

Alcove l2_alcove(long long i, Sign sign) {
    Alcove a;
    a.sign = sign;
    if (i % 2 == 0) {
        a.s = {Rat(i / 2), Rat(-i / 2)};
        a.w = Permutation::identity(2);
    } else {
        a.s = {Rat((1 - i) / 2), Rat((i - 1) / 2)};
        a.w = Permutation{{2, 1}};
    }
    return a;
}

std::string L2Class::to_string() const {
    switch (kind) {
        case AlcoveK:
            return "A_" + std::to_string(index) + "(" + sign_char(sign) + ") = " +
                   l2_alcove(index, sign).to_string();
        case WallK:
            return std::string("Wall(d=") + std::to_string(index) + "," +
                   sign_char(sign) + ")";
        case DegenerateK:
            return "Degenerate";
    }
    return "?";
}

L2Class classify_theta_l2(const ParamTheta& t) {
    if (t.level() != 2) fail("WrongLevel", "classification only implemented for l=2");
    Rat sum = t.sum();
    L2Class out;
    if (sum == Rat(0)) {
        out.kind = L2Class::DegenerateK;
        return out;
    }
    if (sum < Rat(0)) {
        L2Class flipped = classify_theta_l2(bar_theta(t));
        flipped.sign = Sign::Minus;
        return flipped;
    }
    Rat d = t.theta[0] / sum;  // scale-invariant first coordinate on the sum=1 slice
    if (rat_is_integer(d)) {
        out.kind = L2Class::WallK;
        out.index = d.numerator();
    } else {
        out.kind = L2Class::AlcoveK;
        out.index = rat_floor(d);
    }
    out.sign = Sign::Plus;
    return out;
}

std::pair<Alcove, Alcove> wall_adjacent_alcoves_l2(long long d, Sign sign) {
    return {l2_alcove(d - 1, sign), l2_alcove(d, sign)};
}

}  // namespace mpsym
