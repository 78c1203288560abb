#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mpsym/partition.hpp"
#include "mpsym/rational.hpp"

namespace mpsym {

// Coupling constants (h, H_1, ..., H_{l-1}); H_0 := -(H_1 + ... + H_{l-1}).
struct ParamH {
    Rat h;
    std::vector<Rat> H;  // H_1..H_{l-1}
    int level() const { return static_cast<int>(H.size()) + 1; }
    Rat H0() const;
};

// theta = (-h + H_0, H_1, ..., H_{l-1}); sum theta = -h.
struct ParamTheta {
    std::vector<Rat> theta;
    int level() const { return static_cast<int>(theta.size()); }
    Rat sum() const;
};

// (m, r) coordinates: h = r, H_i = r (m^i - m^{i-1}).
struct ParamMR {
    std::vector<Rat> m;
    Rat r;
};

enum class Sign { Plus, Minus };
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Alcove datum: integer charge, permutation, sign.
struct Alcove {
    Charge s;
    Permutation w;
    Sign sign = Sign::Plus;
    std::string to_string() const;
};

ParamTheta h_to_theta(const ParamH& p);
ParamH theta_to_h(const ParamTheta& t);
ParamH mr_to_h(const ParamMR& p);                      // ZeroR if r = 0
ParamMR h_to_mr(const ParamH& p, const Rat& normalization);  // m^0 = normalization

// Hyperplanes from the wall list that p satisfies: h = 0, or
// (H_i + ... + H_j) + m h = 0 with 1 <= i <= j <= l-1 and 1-n <= m <= n-1.
struct WallHit {
    bool h_wall = false;  // the h = 0 hyperplane
    int i = 0, j = 0;
    long long mcoef = 0;
    std::string to_string() const;
};
std::vector<WallHit> git_walls(const ParamH& p, long long n);
bool is_regular(const ParamH& p, long long n);

// bar on theta: (-t_0, -t_{l-1}, ..., -t_1); theta in alpha(s,w,+) iff
// bar(theta) in alpha(s,w,-)
ParamTheta bar_theta(const ParamTheta& t);

// Displayed representative of an alcove: with S = w^{-1}.s (twisted action),
//   plus:  theta_i = 1/l + S_i - S_{(i-1) mod l}
//   minus: theta_i = -1/l + S_{l-1-i} - S_{(l-i) mod l}
// The twist makes representatives respect alpha(w'.s, w'w, ±) = alpha(s, w, ±)
// and keeps them off every wall.
ParamTheta alcove_rep(const Alcove& a);

// l = 2 alcove dictionary: A_i = alpha((i/2,-i/2), id, +) for even i and
// alpha(((1-i)/2,(i-1)/2), sigma, +) for odd i; on the negative sheet the same
// data with sign -. The open region A_i is i < theta_0 < i+1 on the sum = 1
// slice.
Alcove l2_alcove(long long i, Sign sign);

struct L2Class {
    enum Kind { AlcoveK, WallK, DegenerateK } kind = DegenerateK;
    long long index = 0;  // alcove index i, or wall value d
    Sign sign = Sign::Plus;
    std::string to_string() const;
};

L2Class classify_theta_l2(const ParamTheta& t);  // WrongLevel unless l = 2

// the two alcoves A_{d-1}, A_d flanking the integer wall d
std::pair<Alcove, Alcove> wall_adjacent_alcoves_l2(long long d, Sign sign = Sign::Plus);

}  // namespace mpsym
