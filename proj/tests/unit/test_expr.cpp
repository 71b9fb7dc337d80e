#include <doctest.h>

#include "isotropy/expr.hpp"
#include "isotropy/factory.hpp"
#include "isotropy/json_io.hpp"
#include "random.hpp"

#include <functional>

using namespace isotropy;
using isotropy::testing::Rng;

namespace {

std::size_t error_offset(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error");
    return 0;
}

}  // namespace

TEST_CASE("parse rational functions") {
    const BiPoly X = BiPoly::X();
    const BiPoly t = BiPoly::t();
    CHECK(parse_ratfun("X^2 - t") == RatFun(X * X - t));
    const RatFun f = parse_ratfun("(X^3+t)/(X-1)");
    CHECK(f.num() == X * X * X + t);
    CHECK(f.den() == X - 1);
    CHECK(parse_ratfun(" - t * -X ") == RatFun(t * X));
    CHECK(parse_ratfun("2^10") == RatFun(1024));
    CHECK(parse_ratfun("X/2/3") == RatFun(Rat(1, 6) * X));
}

TEST_CASE("parse errors carry offsets") {
    CHECK(error_offset([] { parse_ratfun("X^^2"); }) == 2);
    CHECK(error_offset([] { parse_ratfun("X + "); }) == 4);
    CHECK(error_offset([] { parse_ratfun("(X"); }) == 2);
    CHECK(error_offset([] { parse_ratfun("X )"); }) == 2);
    CHECK(error_offset([] { parse_ratfun("y"); }) == 0);
    CHECK(error_offset([] { parse_ratfun("X/(t-t)"); }) == 1);
    CHECK(error_offset([] { parse_ratfun("X^-1"); }) == 2);
    CHECK(error_offset([] { parse_ratfun(""); }) == 0);
}

TEST_CASE("parse forms") {
    const DiagForm phi1 = parse_form("X-t, X^2+t, t*X, X*(X+t)");
    CHECK(phi1 == phi_r(1));
    CHECK(to_string(phi1) == "X - t, X^2 + t, t*X, X^2 + t*X");
    CHECK(parse_form("1, 1") == DiagForm({1, 1}));
    try {
        parse_form("X, 0");
        FAIL("zero coefficient accepted");
    } catch (const ParseError& e) {
        CHECK(e.reason() == "form must be regular");
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_form(""), ParseError);
    CHECK_THROWS_AS(parse_form("X,"), ParseError);
}

TEST_CASE("parse places") {
    const Place m = parse_place("mono(2,1)");
    REQUIRE(m.monomial_data() != nullptr);
    CHECK(m.monomial_data()->a == 2);
    CHECK(m.monomial_data()->b == 1);
    CHECK(m.monomial_data()->shift.is_zero());
    CHECK(parse_place(" mono( 1 , -1 ) ") == Place::monomial(1, -1));
    CHECK(to_string(Place::monomial(1, -1)) == "mono(1,-1)");
    const Place p = parse_place("p(X^2-t)");
    REQUIRE(p.finite_data() != nullptr);
    CHECK(p.finite_data()->cert == IrredCert{IrredCert::Kind::NewtonCoprime, 1, 2});
    CHECK(parse_place("inf").is_infinity());
    CHECK(to_string(parse_place("mono(1,1,shift=1+t^3)")) == "mono(1,1,shift=1)");

    try {
        parse_place("mono(2,4)");
        FAIL("non-coprime weights accepted");
    } catch (const ParseError& e) {
        CHECK(e.reason() == "monomial weights not coprime");
        CHECK(e.offset() == 0);
    }
    CHECK(error_offset([] { parse_place("mono(0,1)"); }) == 0);
    CHECK(error_offset([] { parse_place("  p(X^2-t^2)"); }) == 2);
    CHECK(error_offset([] { parse_place("mono(2,1"); }) == 8);
    CHECK(error_offset([] { parse_place("mono(1,-1,shift=t)"); }) == 0);
    CHECK(error_offset([] { parse_place("q(X)"); }) == 0);
}

TEST_CASE("printing round-trips") {
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        const RatFun f = rng.nonzero_ratfun();
        CHECK(parse_ratfun(to_string(f)) == f);
        const DiagForm form = rng.form(rng.in(1, 5));
        CHECK(parse_form(to_string(form)) == form);
        const Place w = rng.place();
        CHECK(parse_place(to_string(w)) == w);
        const Verdict v = decide_local_isotropy(form, w);
        CHECK(parse_verdict(print_verdict(v)) == v);
    }
}

TEST_CASE("residue elements and fields round-trip") {
    const UniRatFun u = parse_unirat("(z-1)/z");
    CHECK(to_string(u) == "(z - 1)/z");
    CHECK(parse_unirat(to_string(u)) == u);
    for (const char* text : {"C(z), z = X^2/t", "C(z), z = t*X", "kappa(X^2 - t), e = 2", "kappa(inf), e = 1"}) {
        CHECK(to_string(parse_residue_field(text)) == text);
    }
}
