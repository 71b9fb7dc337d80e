#pragma once

#include "isotropy/bipoly.hpp"
#include "isotropy/upoly.hpp"

#include <string>

namespace isotropy {

/// Reduced rational function num/den in Q(t, X).
///
/// Canonical form: gcd(num, den) = 1 and den has canonical leading
/// coefficient 1, so every field element has exactly one representation and
/// structural equality is field equality.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const Rat& c) : num_(c), den_(1) {}  // NOLINT
    RatFun(int c) : RatFun(Rat(c)) {}  // NOLINT
    RatFun(const BiPoly& p) : num_(p), den_(1) {}  // NOLINT
    /// Reduces; throws std::domain_error on a zero denominator.
    RatFun(const BiPoly& num, const BiPoly& den);

    static RatFun t() { return BiPoly::t(); }
    static RatFun X() { return BiPoly::X(); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    RatFun inverse() const;

    friend bool operator==(const RatFun&, const RatFun&) = default;

private:
    BiPoly num_;
    BiPoly den_;
};

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator*(const RatFun& a, const RatFun& b);
/// Throws std::domain_error when b is zero.
RatFun operator/(const RatFun& a, const RatFun& b);

/// Integer power; negative exponents invert (zero base is a domain error).
RatFun pow(const RatFun& f, int e);

/// t^i X^j for arbitrary integer exponents.
RatFun laurent_monomial(int t_exp, int x_exp);

/// f(t, X + c(t)), reduced.
RatFun shift_x(const RatFun& f, const UPoly& c);

bool canonical_less(const RatFun& a, const RatFun& b);

/// "num" when den = 1, otherwise num/den with parentheses where needed.
std::string to_string(const RatFun& f);

/// Reduced univariate rational function over Q with monic denominator.
class UniRatFun {
public:
    UniRatFun() : den_(1) {}
    UniRatFun(const Rat& c) : num_(c), den_(1) {}  // NOLINT
    UniRatFun(const UPoly& p) : num_(p), den_(1) {}  // NOLINT
    UniRatFun(const UPoly& num, const UPoly& den);

    static UniRatFun var() { return UPoly::var(); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const UniRatFun&, const UniRatFun&) = default;

private:
    UPoly num_;
    UPoly den_;
};

UniRatFun operator+(const UniRatFun& a, const UniRatFun& b);
UniRatFun operator-(const UniRatFun& a, const UniRatFun& b);
UniRatFun operator*(const UniRatFun& a, const UniRatFun& b);
UniRatFun operator/(const UniRatFun& a, const UniRatFun& b);

std::string to_string(const UniRatFun& f, char var = 'z');

}  // namespace isotropy
