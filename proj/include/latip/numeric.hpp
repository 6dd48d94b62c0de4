#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latip {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals in lowest terms with positive denominator (mpq canonical form).
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

/// Thrown when a configured enumeration/box budget is exceeded.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// floor(num/den) and ceil(num/den) for any nonzero den.
inline Int floor_q(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("floor_q: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

inline Int ceil_q(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("ceil_q: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

inline Int rat_floor(const Rat& q) { return floor_q(q.get_num(), q.get_den()); }
inline Int rat_ceil(const Rat& q) { return ceil_q(q.get_num(), q.get_den()); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool lex_less(const IntVec& a, const IntVec& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline std::string int_str(const Int& v) { return v.get_str(); }

/// "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& v) {
    if (is_integer(v)) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Parses a decimal integer (optional leading '-'). Throws on malformed input.
inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed integer literal: " + s);
    return Int(s, 10);
}

}  // namespace latip
