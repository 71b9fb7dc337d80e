#pragma once

#include "isotropy/rational.hpp"
#include "isotropy/upoly.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isotropy {

/// Exponent pair of a monomial t^t X^x.
struct Exponent {
    int t = 0;
    int x = 0;
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Canonical term order: X-degree first, then t-degree. The leading term of a
/// polynomial is the maximal one under this order.
struct ExponentOrder {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return a.x != b.x ? a.x < b.x : a.t < b.t;
    }
};

/// Sparse polynomial in t and X over Q. Zero coefficients are never stored.
class BiPoly {
public:
    using Terms = std::map<Exponent, Rat, ExponentOrder>;

    BiPoly() = default;
    BiPoly(const Rat& c);  // NOLINT
    BiPoly(int c) : BiPoly(Rat(c)) {}  // NOLINT

    static BiPoly monomial(const Rat& c, int t_exp, int x_exp);
    static BiPoly t() { return monomial(Rat(1), 1, 0); }
    static BiPoly X() { return monomial(Rat(1), 0, 1); }
    /// Embed a polynomial in t.
    static BiPoly from_t(const UPoly& p);
    /// Rebuild from coefficients of X^0, X^1, ... (each a polynomial in t).
    static BiPoly from_x_coeffs(std::span<const UPoly> coeffs);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;

    /// Degree in X; -1 for zero.
    int deg_x() const;
    int deg_t() const;
    int total_degree() const;

    /// Coefficient of the leading term in the canonical order.
    const Rat& leading_coefficient() const;
    Exponent leading_exponent() const;

    /// Coefficient of X^j as a polynomial in t.
    UPoly x_coeff(int j) const;
    std::vector<UPoly> x_coeffs() const;
    /// The coefficient of the highest power of X.
    UPoly x_leading() const { return x_coeff(deg_x()); }
    bool is_monic_in_x() const { return !is_zero() && x_leading().is_one(); }
    /// True when X does not occur.
    bool is_t_only() const { return deg_x() <= 0; }
    /// Valid only when is_t_only().
    UPoly as_t_poly() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rat& c);

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void add_term(const Exponent& e, const Rat& c);
    Terms terms_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Rat& c, BiPoly a);

/// Total order on polynomials, used for deterministic sorting.
bool canonical_less(const BiPoly& a, const BiPoly& b);

BiPoly pow(const BiPoly& p, int e);
BiPoly diff_x(const BiPoly& f);
BiPoly diff_t(const BiPoly& f);

/// Scale so that the canonical leading coefficient is 1 (zero stays zero).
BiPoly normalize_leading(const BiPoly& f);

/// f / g in Q[t][X] when g divides f there, otherwise nullopt.
std::optional<BiPoly> try_exact_div(const BiPoly& f, const BiPoly& g);
/// Like try_exact_div but throws std::domain_error when g does not divide f.
BiPoly exact_div(const BiPoly& f, const BiPoly& g);

/// f(t, c(t)).
UPoly eval_x(const BiPoly& f, const UPoly& c);
/// f(t, X + c(t)).
BiPoly shift_x(const BiPoly& f, const UPoly& c);

/// Monic gcd (in Q[t]) of the X-coefficients of f.
UPoly x_content(const BiPoly& f);

std::string to_string(const BiPoly& f);

}  // namespace isotropy
