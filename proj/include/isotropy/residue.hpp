#pragma once

#include "isotropy/bipoly.hpp"
#include "isotropy/ratfun.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace isotropy {

/// Residue field C(z) of a monomial place with weights (a, b); the residue
/// variable z is the class of t^t_exp * X^x_exp = t^(-b) X^a.
struct RationalCz {
    int t_exp = 0;
    int x_exp = 1;
    friend bool operator==(const RationalCz&, const RationalCz&) = default;
};

/// Residue field of a finite point (C((t))[X]/(p), totally ramified of index
/// e = deg p) or of the infinite place (C((t)), e = 1). Its own residue
/// field is C, so square classes are valuation parities.
struct LocalKappa {
    BiPoly p;  // zero at infinity
    int ramification = 1;
    bool at_infinity = false;
    friend bool operator==(const LocalKappa&, const LocalKappa&) = default;
};

using ResidueFieldDesc = std::variant<RationalCz, LocalKappa>;

/// Square-class datum in a LocalKappa field: parity of the valuation.
struct Parity {
    int value = 0;
    friend bool operator==(const Parity&, const Parity&) = default;
};

using ResidueElem = std::variant<UniRatFun, Parity>;

struct ResidueForm {
    ResidueFieldDesc field;
    std::vector<ResidueElem> coeffs;
    friend bool operator==(const ResidueForm&, const ResidueForm&) = default;
};

/// True iff u is a square in C(z): every irreducible factor of num * den
/// occurs to an even power. Zero is a domain error.
bool is_square_c_z(const UniRatFun& u);

enum class ResidueRule {
    Empty,                  // dimension 0
    DimensionOne,           // a single nonzero coefficient never represents 0
    DimensionAtLeastThree,  // C(z) is C1; local fields with residue field C
    EqualSquareClasses,     // <u, v> with -uv a square
    DistinctSquareClasses,  // <u, v> with -uv not a square
};

struct ResidueDecision {
    bool isotropic = false;
    ResidueRule rule = ResidueRule::Empty;
    /// Positions (within the residue form) of the decisive 2-dimensional pair.
    std::optional<std::array<std::size_t, 2>> pair;
    friend bool operator==(const ResidueDecision&, const ResidueDecision&) = default;
};

/// Isotropy over the residue field. -1 is a square in every field in scope,
/// so <u, v> is isotropic iff uv is a square. Throws std::domain_error when
/// an entry does not belong to the form's field.
ResidueDecision decide_residue_form(const ResidueForm& form);

inline bool residue_form_isotropic(const ResidueForm& form) { return decide_residue_form(form).isotropic; }

std::string to_string(const ResidueFieldDesc& field);
std::string to_string(const ResidueElem& e);
std::string to_string(ResidueRule rule);

}  // namespace isotropy
