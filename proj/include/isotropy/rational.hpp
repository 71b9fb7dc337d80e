#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace isotropy {

/// Arbitrary-precision rational, always kept in lowest terms with positive
/// denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& q) { return sgn(q); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Square root of q when q is the square of a rational.
inline std::optional<Rat> rational_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Int& n = q.get_num();
    const Int& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(rn, rd);
}

inline Rat pow(const Rat& q, int e) {
    if (e < 0) {
        if (sgn(q) == 0) throw std::domain_error("negative power of zero");
        return 1 / pow(q, -e);
    }
    Rat result = 1;
    Rat base = q;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace isotropy
