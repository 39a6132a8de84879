#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace admkit {

// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
// denominator) as long as they are built through mpq_class arithmetic;
// the helpers below canonicalize on entry.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p/q" or decimal-free fraction strings.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

inline bool is_positive_integer(const Rat& r) { return is_integer(r) && r > 0; }

// Exact square root when r is a square of a rational; returns false otherwise.
inline bool rat_sqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rat(sn, sd);
    out.canonicalize();
    return true;
}

// floor(r) as arbitrary-precision integer.
inline mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace admkit
