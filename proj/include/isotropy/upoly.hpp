#pragma once

#include "isotropy/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isotropy {

/// Dense univariate polynomial over Q. The variable is anonymous; callers
/// interpret it as t (coefficients of a BiPoly, shifts) or as the residue
/// variable z.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rat& c);  // NOLINT: constants convert implicitly
    UPoly(int c) : UPoly(Rat(c)) {}  // NOLINT
    UPoly(std::initializer_list<Rat> coeffs_low_to_high);
    explicit UPoly(std::vector<Rat> coeffs_low_to_high);

    static UPoly monomial(const Rat& c, int degree);
    static UPoly var() { return monomial(Rat(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Coefficient of var^k, zero outside the stored range.
    const Rat& coeff(int k) const;
    const Rat& leading() const;
    std::span<const Rat> coeffs() const { return coeffs_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rat& c);

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

UPoly operator+(UPoly a, const UPoly& b);
UPoly operator-(UPoly a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rat& c, UPoly a);

/// Total order used for canonical sorting (degree first, then coefficients).
bool canonical_less(const UPoly& a, const UPoly& b);

UPoly pow(const UPoly& p, int e);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// a / b, throwing std::domain_error unless the division is exact.
UPoly exact_div(const UPoly& a, const UPoly& b);

bool divides(const UPoly& d, const UPoly& a);

/// Monic gcd; gcd(0, 0) is a domain error.
UPoly gcd(const UPoly& a, const UPoly& b);

UPoly derivative(const UPoly& p);

/// Monic product of the distinct irreducible factors.
UPoly squarefree_part(const UPoly& p);

/// Monic product of the irreducible factors occurring to an odd power
/// (Yun's square-free decomposition). p is a constant times a square iff
/// this is 1.
UPoly odd_multiplicity_part(const UPoly& p);

UPoly monic(const UPoly& p);

/// Exponent of the lowest-degree nonzero term; domain error on zero.
int t_order(const UPoly& g);

Rat eval(const UPoly& p, const Rat& x);

/// p(q(var)).
UPoly compose(const UPoly& p, const UPoly& q);

/// Drop every term of degree >= n.
UPoly truncate(const UPoly& p, int n);

/// Print in variable `var`, highest degree first ("t^2 - 3*t + 1/2").
std::string to_string(const UPoly& p, char var = 't');

}  // namespace isotropy
