#include "mpsym/rational.hpp"

#include <sstream>

namespace mpsym {

std::string rat_str(const Rat& x) {
    std::string s = std::to_string(x.numerator());
    if (x.denominator() != 1) {
        s += '/';
        s += std::to_string(x.denominator());
    }
    return s;
}

std::string rat_seq_str(const std::vector<Rat>& xs, const char* sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += rat_str(xs[i]);
    }
    return out;
}

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            long long p = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument("trailing junk");
            return Rat(p);
        }
        size_t used = 0;
        long long p = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("bad numerator");
        std::string den = s.substr(slash + 1);
        long long q = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument("bad denominator");
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

}  // namespace mpsym
