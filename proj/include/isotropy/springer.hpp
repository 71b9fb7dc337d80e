#pragma once

#include "isotropy/family.hpp"
#include "isotropy/form.hpp"
#include "isotropy/place.hpp"
#include "isotropy/residue.hpp"

#include <optional>
#include <vector>

namespace isotropy {

/// One half of a Springer decomposition: the residue form together with the
/// positions of the input coefficients it came from.
struct SpringerPart {
    ResidueForm form;
    std::vector<std::size_t> indices;
    friend bool operator==(const SpringerPart&, const SpringerPart&) = default;
};

struct SpringerSplit {
    SpringerPart even;
    SpringerPart odd;
};

/// Writes each a_i = u_i * pi^(w(a_i)) for the place's fixed uniformizer pi
/// and sorts the residues of the units u_i by the parity of w(a_i).
SpringerSplit springer_split(const DiagForm& form, const Place& w);

enum class PartName { Even, Odd };

enum class VerdictRule {
    DimensionAtLeastThree,  // some residue form has dimension >= 3
    SquareClassPair,        // some residue form is a 2-dim pair in one square class
    BothAnisotropic,        // neither residue form represents zero
};

struct Verdict {
    bool isotropic = false;
    SpringerPart even;
    SpringerPart odd;
    ResidueDecision even_decision;
    ResidueDecision odd_decision;
    VerdictRule rule = VerdictRule::BothAnisotropic;
    /// The residue form that made the form isotropic (even is checked first).
    std::optional<PartName> part;
    /// Input positions of the decisive pair for SquareClassPair.
    std::vector<std::size_t> witness;

    int even_dim() const { return static_cast<int>(even.indices.size()); }
    int odd_dim() const { return static_cast<int>(odd.indices.size()); }
    const ResidueFieldDesc& residue_field() const { return even.form.field; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Isotropy over the completion at w: by Springer's theorem (henselian,
/// residue characteristic 0) the form is isotropic iff one of its two
/// residue forms is.
Verdict decide_local_isotropy(const DiagForm& form, const Place& w);

struct Witness {
    Place place;
    Verdict verdict;
};

/// First place of the expanded family (in its enumeration order) where the
/// form is anisotropic. Places are evaluated by up to `workers` threads; the
/// answer does not depend on the thread count.
std::optional<Witness> witness_search(const DiagForm& form, const PlaceFamily& family, unsigned workers = 1);

std::string to_string(VerdictRule rule);
std::string to_string(PartName part);

}  // namespace isotropy
