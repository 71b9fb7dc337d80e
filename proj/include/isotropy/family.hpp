#pragma once

#include "isotropy/bipoly.hpp"
#include "isotropy/place.hpp"
#include "isotropy/upoly.hpp"

#include <variant>
#include <vector>

namespace isotropy {

/// Bounded enumeration of catalogued places.
struct FamilyBounds {
    int a_max = 0;      // monomial places with 1 <= a <= a_max
    int b_abs_max = 3;  // and |b| <= b_abs_max
    std::vector<UPoly> shifts;          // centres for b > 0 (reduced, deduplicated)
    std::vector<UPoly> linear_centers;  // finite points X - c
    std::vector<BiPoly> extra_p;        // further finite points
    bool include_infinity = true;
};

/// Sampling bounds used throughout: shifts {0, 1, t, 1+t, t^2}, linear
/// centres {0, 1, -1, t, 1+t}, extra p in {X^2 - t, X^2 - t^3}, infinity.
FamilyBounds default_bounds(int a_max);

/// Either an explicit list (kept in the given order) or generated bounds.
struct PlaceFamily {
    std::variant<std::vector<Place>, FamilyBounds> source;
};

/// Deterministic expansion. Generated families are ordered: monomial places
/// by (a + |b|, a, b, shift degree, shift), then finite points by
/// (deg_X p, canonical order of p), then the infinite place. Duplicates are
/// dropped.
std::vector<Place> expand(const PlaceFamily& family);

/// Order used for generated families.
bool enumeration_less(const Place& x, const Place& y);

}  // namespace isotropy
