#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpsym {

// Exact rational scalar. All quantities in this library are tiny (numerators
// bounded by a few thousand, denominators by lcm of the m-grid denominators),
// so int64 components never get near overflow.
using Rat = boost::rational<long long>;

inline long long rat_floor(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

// fractional part in [0,1)
inline Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

inline bool rat_is_integer(const Rat& x) { return x.denominator() == 1; }

std::string rat_str(const Rat& x);               // "p/q", or "p" when q = 1
std::string rat_seq_str(const std::vector<Rat>& xs, const char* sep = ",");
Rat parse_rat(const std::string& text);          // throws std::invalid_argument
std::vector<Rat> parse_rat_list(const std::string& text);  // comma separated

}  // namespace mpsym
