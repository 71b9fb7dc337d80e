#include "isotropy/kernel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isotropy {

namespace {

// Polynomials in X over Q[t], stored as X-coefficient vectors (low to high)
// with no trailing zero coefficient.
using XPoly = std::vector<UPoly>;

int degree(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(XPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly content(const XPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

XPoly divide_coeffs(XPoly p, const UPoly& d) {
    if (d.is_one()) return p;
    for (auto& c : p) c = exact_div(c, d);
    return p;
}

// Primitive part with the rational scale fixed so the leading t-coefficient of
// the leading X-coefficient is 1.
XPoly primitive_part(const XPoly& p) {
    XPoly q = divide_coeffs(p, content(p));
    const Rat lc = q.back().leading();
    if (lc != 1) {
        const Rat inv = 1 / lc;
        for (auto& c : q) c *= inv;
    }
    return q;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
XPoly pseudo_remainder(XPoly a, const XPoly& b) {
    const int db = degree(b);
    int e = degree(a) - db + 1;
    const UPoly& lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const UPoly la = a.back();
        const int shift = degree(a) - db;
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
        trim(a);
        --e;
    }
    if (e > 0) {
        const UPoly scale = pow(lb, static_cast<unsigned>(e));
        for (auto& c : a) c *= scale;
    }
    return a;
}

UPoly subresultant(XPoly a, XPoly b) {
    const int da0 = degree(a);
    const int db0 = degree(b);
    if (db0 == 0) return pow(b[0], static_cast<unsigned>(da0));
    if (da0 == 0) return pow(a[0], static_cast<unsigned>(db0));

    const UPoly ca = content(a);
    const UPoly cb = content(b);
    a = divide_coeffs(std::move(a), ca);
    b = divide_coeffs(std::move(b), cb);
    const UPoly scale = pow(ca, static_cast<unsigned>(db0)) * pow(cb, static_cast<unsigned>(da0));

    Rat sign = 1;
    if (da0 < db0) {
        std::swap(a, b);
        if ((da0 & 1) && (db0 & 1)) sign = -1;
    }
    UPoly g = Rat(1);
    UPoly h = Rat(1);
    while (true) {
        const int delta = degree(a) - degree(b);
        if ((degree(a) & 1) && (degree(b) & 1)) sign = -sign;
        XPoly r = pseudo_remainder(a, b);
        if (r.empty()) return {};
        a = std::move(b);
        b = divide_coeffs(std::move(r), g * pow(h, static_cast<unsigned>(delta)));
        g = a.back();
        if (delta > 0) h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
        if (degree(b) > 0) continue;
        const int da = degree(a);
        h = exact_div(pow(b.back(), static_cast<unsigned>(da)), pow(h, static_cast<unsigned>(da - 1)));
        return sign * (scale * h);
    }
}

}  // namespace

BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (f.is_zero()) return normalize_leading(g);
    if (g.is_zero()) return normalize_leading(f);

    XPoly a = f.x_coeffs();
    XPoly b = g.x_coeffs();
    const UPoly c = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty() && degree(b) > 0) {
        XPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.empty() ? XPoly{} : primitive_part(r);
    }
    XPoly prim = b.empty() ? a : XPoly{UPoly(Rat(1))};
    for (auto& coeff : prim) coeff *= c;
    return normalize_leading(BiPoly::from_x_coeffs(prim));
}

BiPoly squarefree_part(const BiPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of zero");
    if (f.is_constant()) return BiPoly(1);
    BiPoly g = gcd_bipoly(f, diff_x(f));
    g = gcd_bipoly(g, diff_t(f));
    return normalize_leading(exact_div(f, g));
}

UPoly resultant_x(const BiPoly& p, const BiPoly& g) {
    if (p.deg_x() < 1 || !p.is_monic_in_x())
        throw std::domain_error("resultant_x requires p monic in X of positive degree");
    if (g.is_zero()) throw std::domain_error("resultant_x of a zero polynomial");
    UPoly r = subresultant(p.x_coeffs(), g.x_coeffs());
    if (r.is_zero()) throw std::domain_error("resultant vanishes");
    return r;
}

WeightedPart min_weight_part(const BiPoly& f, int a, int b) {
    if (f.is_zero()) throw std::domain_error("weighted part of zero");
    long long best = std::numeric_limits<long long>::max();
    for (const auto& [e, c] : f.terms()) best = std::min(best, 1LL * a * e.t + 1LL * b * e.x);
    WeightedPart out;
    out.weight = static_cast<int>(best);
    for (const auto& [e, c] : f.terms()) {
        if (1LL * a * e.t + 1LL * b * e.x == best) out.part += BiPoly::monomial(c, e.t, e.x);
    }
    return out;
}

}  // namespace isotropy
