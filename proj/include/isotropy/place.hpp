#pragma once

#include "isotropy/bipoly.hpp"
#include "isotropy/ratfun.hpp"
#include "isotropy/residue.hpp"
#include "isotropy/upoly.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace isotropy {

/// Rejected place descriptor.
class PlaceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Why a finite point's polynomial is irreducible over C((t)).
struct IrredCert {
    enum class Kind { Linear, NewtonCoprime };
    Kind kind = Kind::Linear;
    // Newton polygon slope h/d, gcd(h, d) = 1, d = deg_X p.
    int slope_num = 0;
    int slope_den = 1;
    friend bool operator==(const IrredCert&, const IrredCert&) = default;
};

/// w(t^i X^j) = a*i + b*j after X -> X + shift(t); minima over terms.
struct MonomialPlace {
    int a = 1;
    int b = 0;
    UPoly shift;
    friend bool operator==(const MonomialPlace&, const MonomialPlace&) = default;
};

/// v_p for p monic in X with coefficients in Q[t], irreducible over C((t)).
struct FinitePoint {
    BiPoly p;
    IrredCert cert;
    friend bool operator==(const FinitePoint&, const FinitePoint&) = default;
};

/// v_inf(f) = -deg_X f on polynomials.
struct InfinityPoint {
    friend bool operator==(const InfinityPoint&, const InfinityPoint&) = default;
};

/// A validated Z-valuation on C((t))(X). Only constructible through the
/// validating factories, so every Place satisfies its invariants.
class Place {
public:
    using Kind = std::variant<MonomialPlace, FinitePoint, InfinityPoint>;

    /// Requires a >= 1 and gcd(a, |b|) = 1; the shift must vanish when
    /// b <= 0 and is reduced modulo t^ceil(b/a).
    static Place monomial(int a, int b, const UPoly& shift = {});
    /// Requires p monic in X with a Newton irreducibility certificate.
    static Place finite_point(const BiPoly& p);
    static Place infinity() { return Place(InfinityPoint{}); }

    const Kind& kind() const { return kind_; }
    const MonomialPlace* monomial_data() const { return std::get_if<MonomialPlace>(&kind_); }
    const FinitePoint* finite_data() const { return std::get_if<FinitePoint>(&kind_); }
    bool is_infinity() const { return std::holds_alternative<InfinityPoint>(kind_); }

    friend bool operator==(const Place&, const Place&) = default;

private:
    explicit Place(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

/// Unvalidated descriptor as produced by the parser.
struct RawMonomial {
    int a = 0;
    int b = 0;
    UPoly shift;
};
struct RawFinitePoint {
    BiPoly p;
};
struct RawInfinity {};
using RawPlace = std::variant<RawMonomial, RawFinitePoint, RawInfinity>;

Place normalize_place(const RawPlace& raw);

/// Linear for deg_X p = 1; NewtonCoprime when the t-adic Newton polygon of p
/// is one segment of slope h/d with gcd(h, d) = 1, d = deg_X p. Otherwise
/// throws PlaceError("irreducibility undetermined").
IrredCert newton_irreducibility(const BiPoly& p);

/// w(f) for f != 0.
int valuation(const Place& w, const RatFun& f);

/// Residue of a w-unit: an element of C(z) at monomial places, the square
/// class (valuation parity) in kappa_p otherwise. Throws std::domain_error
/// when w(f) != 0.
ResidueElem residue_unit(const Place& w, const RatFun& f);

/// The fixed local uniformizer used to split forms: t^alpha (X - c)^beta
/// with a*alpha + b*beta = 1 at monomial places, p at finite points, 1/X at
/// infinity.
RatFun uniformizer(const Place& w);

ResidueFieldDesc residue_field(const Place& w);

/// w(t).
int pi_value(const Place& w);
/// The generator i of w(E^x) = iZ; w lies in Omega_r iff this is <= r.
int omega_membership(const Place& w);

std::string to_string(const Place& w);

}  // namespace isotropy
