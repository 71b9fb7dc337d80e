#pragma once

#include "isotropy/bipoly.hpp"
#include "isotropy/upoly.hpp"

namespace isotropy {

/// Greatest common divisor in Q[t, X], scaled to canonical leading
/// coefficient 1. Both arguments zero is a domain error.
///
/// Computed as gcd(contents) * primitive PRS over Q[t][X].
BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g);

/// Radical of f, scaled to canonical leading coefficient 1:
/// f / gcd(f, df/dX, df/dt). Zero input is a domain error.
BiPoly squarefree_part(const BiPoly& f);

/// Res_X(p, g) for p monic in X, i.e. the product of g over the roots of p.
/// Throws std::domain_error when p is not monic of positive X-degree, when g
/// is zero, or ("resultant vanishes") when p and g share a factor.
UPoly resultant_x(const BiPoly& p, const BiPoly& g);

struct WeightedPart {
    int weight = 0;
    BiPoly part;
    friend bool operator==(const WeightedPart&, const WeightedPart&) = default;
};

/// Minimum of a*i + b*j over the terms t^i X^j of f, and the sum of the terms
/// attaining it.
WeightedPart min_weight_part(const BiPoly& f, int a, int b);

}  // namespace isotropy
