#include "isotropy/springer.hpp"

#include "isotropy/parallel.hpp"

namespace isotropy {

SpringerSplit springer_split(const DiagForm& form, const Place& w) {
    SpringerSplit split;
    split.even.form.field = residue_field(w);
    split.odd.form.field = split.even.form.field;
    const RatFun pi = uniformizer(w);
    for (std::size_t i = 0; i < form.dim(); ++i) {
        const int v = valuation(w, form[i]);
        const RatFun unit = form[i] / pow(pi, v);
        SpringerPart& part = (v % 2 == 0) ? split.even : split.odd;
        part.form.coeffs.push_back(residue_unit(w, unit));
        part.indices.push_back(i);
    }
    return split;
}

Verdict decide_local_isotropy(const DiagForm& form, const Place& w) {
    SpringerSplit split = springer_split(form, w);
    Verdict v;
    v.even_decision = decide_residue_form(split.even.form);
    v.odd_decision = decide_residue_form(split.odd.form);
    v.even = std::move(split.even);
    v.odd = std::move(split.odd);
    v.isotropic = v.even_decision.isotropic || v.odd_decision.isotropic;
    if (!v.isotropic) {
        v.rule = VerdictRule::BothAnisotropic;
        return v;
    }
    const bool even_wins = v.even_decision.isotropic;
    const ResidueDecision& d = even_wins ? v.even_decision : v.odd_decision;
    const SpringerPart& part = even_wins ? v.even : v.odd;
    v.part = even_wins ? PartName::Even : PartName::Odd;
    if (d.rule == ResidueRule::DimensionAtLeastThree) {
        v.rule = VerdictRule::DimensionAtLeastThree;
    } else {
        v.rule = VerdictRule::SquareClassPair;
        v.witness = {part.indices[(*d.pair)[0]], part.indices[(*d.pair)[1]]};
    }
    return v;
}

std::optional<Witness> witness_search(const DiagForm& form, const PlaceFamily& family, unsigned workers) {
    const std::vector<Place> places = expand(family);
    auto verdicts = parallel_map<std::optional<Verdict>>(
        places.size(), workers, [&](std::size_t i) { return std::optional<Verdict>(decide_local_isotropy(form, places[i])); });
    for (std::size_t i = 0; i < places.size(); ++i) {
        if (!verdicts[i]->isotropic) return Witness{places[i], *std::move(verdicts[i])};
    }
    return std::nullopt;
}

std::string to_string(VerdictRule rule) {
    switch (rule) {
        case VerdictRule::DimensionAtLeastThree: return "dimension-at-least-three";
        case VerdictRule::SquareClassPair: return "square-class-pair";
        case VerdictRule::BothAnisotropic: return "both-residue-forms-anisotropic";
    }
    return "unknown";
}

std::string to_string(PartName part) { return part == PartName::Even ? "even" : "odd"; }

}  // namespace isotropy
