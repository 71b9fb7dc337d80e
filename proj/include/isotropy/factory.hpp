#pragma once

#include "isotropy/family.hpp"
#include "isotropy/form.hpp"
#include "isotropy/place.hpp"
#include "isotropy/springer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isotropy {

/// <X^r - t, X^(r+1) + t, tX, X(X^r + t)>; r <= 0 is a domain error.
DiagForm phi_r(int r);

/// <1 + X, t + X, t, tX>, the coefficients of Y_1^2, ..., Y_4^2 in
/// Y_1^2 + tY_2^2 + tY_3^2 + X(Y_1^2 + Y_2^2 + tY_4^2).
DiagForm intro_example();

struct Corollary1Result {
    int r = 1;
    DiagForm form;
};

/// r = 1 + max of w(t) over the family (max of the empty family is 0), and
/// phi_r. Every member of the family lies in Omega_(r-1).
Corollary1Result corollary1_construct(const PlaceFamily& family);

/// Members of the family with w(f) != 0, in enumeration order.
std::vector<Place> support(const RatFun& f, const PlaceFamily& family);

struct VerifyOptions {
    int r_max = 1;
    /// Defaults to default_bounds(r_max - 1).
    std::optional<FamilyBounds> bounds;
    std::uint64_t seed = 0;
    /// Additional pseudo-random places drawn from the seed.
    std::size_t random_places = 8;
    unsigned workers = 1;
};

struct PlaceCheck {
    std::string place;
    bool isotropic = false;
    std::string rule;
};

struct RoundReport {
    int r = 1;
    std::vector<PlaceCheck> checks;  // places with omega_membership <= r - 1
    std::size_t isotropic_count = 0;
    std::vector<std::string> violations;
    std::string witness_place;
    bool witness_anisotropic = false;
};

struct TheoremReport {
    int r_max = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> family;
    std::vector<RoundReport> rounds;
    std::size_t violation_count = 0;
    double elapsed_seconds = 0.0;

    bool ok() const;
};

/// For each r in 1..r_max: phi_r must be isotropic at every sampled place of
/// Omega_(r-1) and anisotropic at mono(r,1). Violations are recorded, not
/// thrown. The sample is finite; it does not cover all of Omega_(r-1).
TheoremReport verify_theorem(const VerifyOptions& options);

}  // namespace isotropy
