#include "isotropy/ratfun.hpp"

#include "isotropy/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace isotropy {

RatFun::RatFun(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero expression");
    if (num.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    const BiPoly g = gcd_bipoly(num, den);
    if (g.is_one()) {
        num_ = num;
        den_ = den;
    } else {
        num_ = exact_div(num, g);
        den_ = exact_div(den, g);
    }
    const Rat scale = 1 / den_.leading_coefficient();
    num_ *= scale;
    den_ *= scale;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den() == b.den()) return RatFun(a.num() + b.num(), a.den());
    return RatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num() * b.num());
    return RatFun(a.num() * b.num(), a.den() * b.den());
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero expression");
    return RatFun(a.num() * b.den(), a.den() * b.num());
}

RatFun pow(const RatFun& f, int e) {
    if (e < 0) return pow(f.inverse(), -e);
    const auto ue = static_cast<unsigned>(e);
    return RatFun(pow(f.num(), ue), pow(f.den(), ue));
}

RatFun laurent_monomial(int t_exp, int x_exp) {
    const BiPoly num = BiPoly::monomial(Rat(1), std::max(t_exp, 0), std::max(x_exp, 0));
    const BiPoly den = BiPoly::monomial(Rat(1), std::max(-t_exp, 0), std::max(-x_exp, 0));
    return RatFun(num, den);
}

RatFun shift_x(const RatFun& f, const UPoly& c) {
    if (c.is_zero()) return f;
    return RatFun(shift_x(f.num(), c), shift_x(f.den(), c));
}

bool canonical_less(const RatFun& a, const RatFun& b) {
    if (a.den() != b.den()) return canonical_less(a.den(), b.den());
    return canonical_less(a.num(), b.num());
}

namespace {

// Parenthesize only what would otherwise parse differently.
std::string fraction(const std::string& num, const std::string& den) {
    const bool bare_num = num.find_first_of("+-", 1) == std::string::npos;
    const bool bare_den = den.find_first_of("+-*/") == std::string::npos;
    return (bare_num ? num : "(" + num + ")") + "/" + (bare_den ? den : "(" + den + ")");
}

}  // namespace

std::string to_string(const RatFun& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return fraction(to_string(f.num()), to_string(f.den()));
}

UniRatFun::UniRatFun(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero expression");
    if (num.is_zero()) {
        den_ = UPoly(Rat(1));
        return;
    }
    const UPoly g = gcd(num, den);
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
    const Rat scale = 1 / den_.leading();
    num_ *= scale;
    den_ *= scale;
}

UniRatFun operator+(const UniRatFun& a, const UniRatFun& b) {
    return UniRatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

UniRatFun operator-(const UniRatFun& a, const UniRatFun& b) {
    return UniRatFun(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

UniRatFun operator*(const UniRatFun& a, const UniRatFun& b) {
    return UniRatFun(a.num() * b.num(), a.den() * b.den());
}

UniRatFun operator/(const UniRatFun& a, const UniRatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero expression");
    return UniRatFun(a.num() * b.den(), a.den() * b.num());
}

std::string to_string(const UniRatFun& f, char var) {
    if (f.den().is_one()) return to_string(f.num(), var);
    return fraction(to_string(f.num(), var), to_string(f.den(), var));
}

}  // namespace isotropy
