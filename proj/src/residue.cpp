#include "isotropy/residue.hpp"

#include <sstream>
#include <stdexcept>

namespace isotropy {

bool is_square_c_z(const UniRatFun& u) {
    if (u.is_zero()) throw std::domain_error("square test of zero");
    // num/den is a square iff num*den is; every constant of C is a square.
    return odd_multiplicity_part(u.num() * u.den()).is_constant();
}

namespace {

bool same_square_class(const ResidueElem& u, const ResidueElem& v) {
    if (const auto* pu = std::get_if<Parity>(&u)) return pu->value == std::get<Parity>(v).value;
    return is_square_c_z(std::get<UniRatFun>(u) * std::get<UniRatFun>(v));
}

void check_membership(const ResidueForm& form) {
    const bool local = std::holds_alternative<LocalKappa>(form.field);
    for (const auto& e : form.coeffs) {
        if (local != std::holds_alternative<Parity>(e))
            throw std::domain_error("residue form mixes residue fields");
        if (const auto* u = std::get_if<UniRatFun>(&e); u && u->is_zero())
            throw std::domain_error("zero coefficient in residue form");
        if (const auto* p = std::get_if<Parity>(&e); p && p->value != 0 && p->value != 1)
            throw std::domain_error("parity datum out of range");
    }
}

}  // namespace

ResidueDecision decide_residue_form(const ResidueForm& form) {
    check_membership(form);
    ResidueDecision d;
    switch (form.coeffs.size()) {
        case 0:
            d.rule = ResidueRule::Empty;
            return d;
        case 1:
            d.rule = ResidueRule::DimensionOne;
            return d;
        case 2:
            d.pair = std::array<std::size_t, 2>{0, 1};
            d.isotropic = same_square_class(form.coeffs[0], form.coeffs[1]);
            d.rule = d.isotropic ? ResidueRule::EqualSquareClasses : ResidueRule::DistinctSquareClasses;
            return d;
        default:
            d.rule = ResidueRule::DimensionAtLeastThree;
            d.isotropic = true;
            return d;
    }
}

std::string to_string(const ResidueFieldDesc& field) {
    std::ostringstream os;
    if (const auto* cz = std::get_if<RationalCz>(&field)) {
        os << "C(z), z = ";
        const std::string xs = cz->x_exp == 1 ? "X" : "X^" + std::to_string(cz->x_exp);
        if (cz->t_exp > 0) {
            os << 't';
            if (cz->t_exp > 1) os << '^' << cz->t_exp;
            os << '*' << xs;
        } else if (cz->t_exp == 0) {
            os << xs;
        } else {
            os << xs << "/t";
            if (cz->t_exp < -1) os << '^' << -cz->t_exp;
        }
        return os.str();
    }
    const auto& k = std::get<LocalKappa>(field);
    os << "kappa(" << (k.at_infinity ? std::string("inf") : to_string(k.p)) << "), e = " << k.ramification;
    return os.str();
}

std::string to_string(const ResidueElem& e) {
    if (const auto* p = std::get_if<Parity>(&e)) return p->value ? "odd" : "even";
    return to_string(std::get<UniRatFun>(e), 'z');
}

std::string to_string(ResidueRule rule) {
    switch (rule) {
        case ResidueRule::Empty: return "empty";
        case ResidueRule::DimensionOne: return "dimension-one";
        case ResidueRule::DimensionAtLeastThree: return "dimension-at-least-three";
        case ResidueRule::EqualSquareClasses: return "equal-square-classes";
        case ResidueRule::DistinctSquareClasses: return "distinct-square-classes";
    }
    return "unknown";
}

}  // namespace isotropy
