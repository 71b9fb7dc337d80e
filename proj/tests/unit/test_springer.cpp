#include <doctest.h>

#include "isotropy/expr.hpp"
#include "isotropy/factory.hpp"
#include "isotropy/springer.hpp"
#include "random.hpp"

#include <algorithm>

using namespace isotropy;
using isotropy::testing::Rng;

namespace {

UniRatFun z_at(const SpringerPart& part, std::size_t k) { return std::get<UniRatFun>(part.form.coeffs.at(k)); }

UniRatFun product(const SpringerPart& part) {
    UniRatFun p(Rat(1));
    for (const auto& e : part.form.coeffs) p = p * std::get<UniRatFun>(e);
    return p;
}

DiagForm scaled(const DiagForm& form, const RatFun& lambda) {
    std::vector<RatFun> c;
    for (const auto& a : form.coeffs()) c.push_back(lambda * a);
    return DiagForm(std::move(c));
}

}  // namespace

TEST_CASE("Springer split at a monomial place") {
    const SpringerSplit s = springer_split(parse_form("t, X, t*X, 1"), Place::monomial(1, 0));
    CHECK(s.even.indices == std::vector<std::size_t>{1, 3});
    CHECK(s.odd.indices == std::vector<std::size_t>{0, 2});
    CHECK(z_at(s.even, 0) == parse_unirat("z"));
    CHECK(z_at(s.even, 1) == parse_unirat("1"));
    CHECK(z_at(s.odd, 0) == parse_unirat("1"));
    CHECK(z_at(s.odd, 1) == parse_unirat("z"));
}

TEST_CASE("Springer split at finite points") {
    const SpringerSplit s = springer_split(phi_r(2), parse_place("p(X^2-t)"));
    CHECK(s.even.indices.size() == 3);
    CHECK(s.odd.indices == std::vector<std::size_t>{0});

    const SpringerSplit e = springer_split(parse_form("1, X^2, (X-1)^2/t^2"), parse_place("p(X)"));
    CHECK(e.odd.indices.empty());
    CHECK(e.even.indices.size() == 3);
}

TEST_CASE("local isotropy decisions") {
    CHECK(decide_local_isotropy(phi_r(2), Place::monomial(1, 1)).isotropic);
    CHECK(decide_local_isotropy(phi_r(2), Place::monomial(1, -1)).isotropic);
    CHECK(decide_local_isotropy(parse_form("1, 1"), parse_place("p(X)")).isotropic);
    CHECK_FALSE(decide_local_isotropy(parse_form("1, X"), Place::monomial(1, 0)).isotropic);

    const Verdict v = decide_local_isotropy(phi_r(2), Place::monomial(2, 1));
    CHECK_FALSE(v.isotropic);
    CHECK(v.rule == VerdictRule::BothAnisotropic);
    CHECK(v.even.indices == std::vector<std::size_t>{0, 1});
    CHECK(v.odd.indices == std::vector<std::size_t>{2, 3});
    // residues are fixed only up to a common factor per part; the products
    // are in the classes of (z - 1) * 1 and 1 * (z + 1)
    CHECK(is_square_c_z(product(v.even) * parse_unirat("z-1")));
    CHECK(is_square_c_z(product(v.odd) * parse_unirat("z+1")));
    CHECK_FALSE(is_square_c_z(product(v.even)));
    CHECK_FALSE(is_square_c_z(product(v.odd)));

    const Verdict pair = decide_local_isotropy(parse_form("X, 4*X, t"), parse_place("inf"));
    CHECK(pair.isotropic);
    CHECK(pair.rule == VerdictRule::SquareClassPair);
    CHECK(pair.witness == std::vector<std::size_t>{0, 1});

    const Verdict big = decide_local_isotropy(parse_form("1, X, t, t*X, X^2 + t"), Place::monomial(1, 0));
    CHECK(big.isotropic);
    CHECK(big.rule == VerdictRule::DimensionAtLeastThree);
}

TEST_CASE("witness search") {
    const auto intro = witness_search(intro_example(), PlaceFamily{default_bounds(3)});
    REQUIRE(intro.has_value());
    CHECK(intro->place == Place::monomial(1, 0));

    const auto phi3 = witness_search(phi_r(3), PlaceFamily{default_bounds(3)});
    REQUIRE(phi3.has_value());
    CHECK(phi3->place == Place::monomial(3, 1));

    CHECK_FALSE(witness_search(parse_form("1, -1, X, t"), PlaceFamily{default_bounds(4)}).has_value());

    const std::vector<Place> listed{parse_place("inf"), parse_place("mono(2,1)"), parse_place("mono(1,0)")};
    const auto first = witness_search(phi_r(2), PlaceFamily{listed});
    REQUIRE(first.has_value());
    CHECK(first->place == parse_place("mono(2,1)"));

    for (unsigned workers : {2u, 3u, 8u}) {
        const auto again = witness_search(intro_example(), PlaceFamily{default_bounds(3)}, workers);
        REQUIRE(again.has_value());
        CHECK(again->place == intro->place);
        CHECK(again->verdict == intro->verdict);
    }
}

TEST_CASE("verdicts do not depend on the representation") {
    const Place w = Place::monomial(2, 1);
    CHECK(decide_local_isotropy(parse_form("(X^2-t)*(X+1)/(X+1), X^3+t, t*X, X*(X^2+t)"), w) ==
          decide_local_isotropy(phi_r(2), w));
}

TEST_CASE("decision invariants on random samples") {
    Rng rng(31);
    for (int k = 0; k < 120; ++k) {
        const DiagForm form = rng.form(rng.in(2, 4));
        const Place w = rng.place();
        const Verdict v = decide_local_isotropy(form, w);
        const bool iso = v.isotropic;
        CHECK(v.even_dim() + v.odd_dim() == static_cast<int>(form.dim()));

        CHECK(decide_local_isotropy(scaled(form, rng.nonzero_ratfun()), w).isotropic == iso);

        std::vector<RatFun> perm = form.coeffs();
        std::reverse(perm.begin(), perm.end());
        CHECK(decide_local_isotropy(DiagForm(perm), w).isotropic == iso);

        const RatFun s = rng.nonzero_ratfun();
        std::vector<RatFun> mult = form.coeffs();
        const std::size_t i = static_cast<std::size_t>(rng.in(0, static_cast<int>(mult.size()) - 1));
        mult[i] = mult[i] * s * s;
        CHECK(decide_local_isotropy(DiagForm(mult), w).isotropic == iso);

        if (const auto* m = w.monomial_data()) {
            std::vector<RatFun> shifted;
            for (const auto& a : form.coeffs()) shifted.push_back(shift_x(a, m->shift));
            CHECK(decide_local_isotropy(DiagForm(shifted), Place::monomial(m->a, m->b)).isotropic == iso);
        }

        // a coefficient repeated up to a square gives a hyperbolic pair
        std::vector<RatFun> twin = form.coeffs();
        twin.push_back(form[0] * s * s);
        CHECK(decide_local_isotropy(DiagForm(twin), w).isotropic);
    }
}
