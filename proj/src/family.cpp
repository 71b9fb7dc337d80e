#include "isotropy/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace isotropy {

FamilyBounds default_bounds(int a_max) {
    FamilyBounds b;
    b.a_max = a_max;
    b.b_abs_max = 3;
    const UPoly t = UPoly::var();
    b.shifts = {UPoly{}, UPoly(1), t, UPoly(1) + t, t * t};
    b.linear_centers = {UPoly{}, UPoly(1), UPoly(-1), t, UPoly(1) + t};
    const BiPoly X2 = pow(BiPoly::X(), 2);
    b.extra_p = {X2 - BiPoly::t(), X2 - pow(BiPoly::t(), 3)};
    b.include_infinity = true;
    return b;
}

namespace {

int rank(const Place& w) {
    if (w.monomial_data()) return 0;
    if (w.finite_data()) return 1;
    return 2;
}

}  // namespace

bool enumeration_less(const Place& x, const Place& y) {
    if (rank(x) != rank(y)) return rank(x) < rank(y);
    if (const auto* mx = x.monomial_data()) {
        const auto* my = y.monomial_data();
        const auto kx = std::make_tuple(mx->a + std::abs(mx->b), mx->a, mx->b, mx->shift.degree());
        const auto ky = std::make_tuple(my->a + std::abs(my->b), my->a, my->b, my->shift.degree());
        if (kx != ky) return kx < ky;
        return canonical_less(mx->shift, my->shift);
    }
    if (const auto* fx = x.finite_data()) {
        const auto* fy = y.finite_data();
        if (fx->p.deg_x() != fy->p.deg_x()) return fx->p.deg_x() < fy->p.deg_x();
        return canonical_less(fx->p, fy->p);
    }
    return false;
}

std::vector<Place> expand(const PlaceFamily& family) {
    if (const auto* explicit_list = std::get_if<std::vector<Place>>(&family.source)) return *explicit_list;
    const auto& bounds = std::get<FamilyBounds>(family.source);
    std::vector<Place> out;
    for (int a = 1; a <= bounds.a_max; ++a) {
        for (int b = -bounds.b_abs_max; b <= bounds.b_abs_max; ++b) {
            if (std::gcd(a, std::abs(b)) != 1) continue;
            if (b <= 0) {
                out.push_back(Place::monomial(a, b));
                continue;
            }
            if (bounds.shifts.empty()) out.push_back(Place::monomial(a, b));
            for (const auto& s : bounds.shifts) out.push_back(Place::monomial(a, b, s));
        }
    }
    for (const auto& c : bounds.linear_centers) out.push_back(Place::finite_point(BiPoly::X() - BiPoly::from_t(c)));
    for (const auto& p : bounds.extra_p) out.push_back(Place::finite_point(p));
    if (bounds.include_infinity) out.push_back(Place::infinity());
    std::stable_sort(out.begin(), out.end(), enumeration_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace isotropy
