#include "isotropy/place.hpp"

#include "isotropy/kernel.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

namespace isotropy {

namespace {

int ceil_div(int n, int d) { return n >= 0 ? (n + d - 1) / d : -((-n) / d); }

// Number of times p divides f in Q[t][X]; f is replaced by the cofactor.
int strip_factor(BiPoly& f, const BiPoly& p) {
    int k = 0;
    while (auto q = try_exact_div(f, p)) {
        f = *std::move(q);
        ++k;
    }
    return k;
}

// Expresses (N * t^alpha X^beta) / D as a rational function of
// z = t^(-b) X^a, where N and D are weighted-homogeneous of matching weight.
UniRatFun weighted_ratio(int a, int b, const BiPoly& N, const BiPoly& D, int alpha, int beta) {
    const Exponent base = D.leading_exponent();
    std::map<int, Rat> num_terms;
    std::map<int, Rat> den_terms;
    auto place_term = [&](std::map<int, Rat>& into, int ti, int xj, const Rat& c) {
        const long long dt = ti - base.t;
        const long long dx = xj - base.x;
        // (dt, dx) must be k * (-b, a).
        if (dx % a != 0 || dt != -static_cast<long long>(b) * (dx / a))
            throw std::logic_error("residue terms are not weighted-homogeneous");
        into[static_cast<int>(dx / a)] += c;
    };
    for (const auto& [e, c] : N.terms()) place_term(num_terms, e.t + alpha, e.x + beta, c);
    for (const auto& [e, c] : D.terms()) place_term(den_terms, e.t, e.x, c);
    int kmin = std::min(num_terms.begin()->first, den_terms.begin()->first);
    auto to_poly = [kmin](const std::map<int, Rat>& terms) {
        std::vector<Rat> c(static_cast<std::size_t>(terms.rbegin()->first - kmin) + 1, Rat(0));
        for (const auto& [k, v] : terms) c[static_cast<std::size_t>(k - kmin)] = v;
        return UPoly(std::move(c));
    };
    return UniRatFun(to_poly(num_terms), to_poly(den_terms));
}

int monomial_valuation(const MonomialPlace& m, const RatFun& f) {
    const BiPoly num = shift_x(f.num(), m.shift);
    const BiPoly den = shift_x(f.den(), m.shift);
    return min_weight_part(num, m.a, m.b).weight - min_weight_part(den, m.a, m.b).weight;
}

int parity_of(int n) { return ((n % 2) + 2) % 2; }

}  // namespace

Place Place::monomial(int a, int b, const UPoly& shift) {
    if (a <= 0) throw PlaceError("monomial place requires a >= 1 (use p(X) for the X-adic place)");
    if (std::gcd(a, std::abs(b)) != 1) throw PlaceError("monomial weights not coprime");
    if (b <= 0) {
        if (!shift.is_zero()) throw PlaceError("monomial shift requires b > 0");
        return Place(MonomialPlace{a, b, {}});
    }
    // t^k with a*k >= b moves the centre by something of weight >= b.
    return Place(MonomialPlace{a, b, truncate(shift, ceil_div(b, a))});
}

Place Place::finite_point(const BiPoly& p) {
    IrredCert cert = newton_irreducibility(p);
    return Place(FinitePoint{p, cert});
}

Place normalize_place(const RawPlace& raw) {
    if (const auto* m = std::get_if<RawMonomial>(&raw)) return Place::monomial(m->a, m->b, m->shift);
    if (const auto* f = std::get_if<RawFinitePoint>(&raw)) return Place::finite_point(f->p);
    return Place::infinity();
}

IrredCert newton_irreducibility(const BiPoly& p) {
    if (p.deg_x() < 1) throw PlaceError("finite point polynomial must have positive degree in X");
    if (!p.is_monic_in_x()) throw PlaceError("finite point polynomial must be monic in X");
    const int d = p.deg_x();
    if (d == 1) return {IrredCert::Kind::Linear, 0, 1};
    const UPoly c0 = p.x_coeff(0);
    if (c0.is_zero()) throw PlaceError("irreducibility undetermined: X divides p");
    const int h = t_order(c0);
    if (std::gcd(h, d) != 1)
        throw PlaceError("irreducibility undetermined: Newton slope " + std::to_string(h) + "/" + std::to_string(d) +
                         " not in lowest terms");
    for (int j = 1; j < d; ++j) {
        const UPoly cj = p.x_coeff(j);
        if (cj.is_zero()) continue;
        if (static_cast<long long>(d) * t_order(cj) < static_cast<long long>(h) * (d - j))
            throw PlaceError("irreducibility undetermined: Newton polygon has more than one segment");
    }
    return {IrredCert::Kind::NewtonCoprime, h, d};
}

int valuation(const Place& w, const RatFun& f) {
    if (f.is_zero()) throw std::domain_error("valuation of zero");
    if (const auto* m = w.monomial_data()) return monomial_valuation(*m, f);
    if (const auto* fp = w.finite_data()) {
        BiPoly num = f.num();
        BiPoly den = f.den();
        return strip_factor(num, fp->p) - strip_factor(den, fp->p);
    }
    return f.den().deg_x() - f.num().deg_x();
}

ResidueElem residue_unit(const Place& w, const RatFun& f) {
    if (valuation(w, f) != 0) throw std::domain_error("residue of a non-unit");
    if (const auto* m = w.monomial_data()) {
        const BiPoly num = shift_x(f.num(), m->shift);
        const BiPoly den = shift_x(f.den(), m->shift);
        return weighted_ratio(m->a, m->b, min_weight_part(num, m->a, m->b).part,
                              min_weight_part(den, m->a, m->b).part, 0, 0);
    }
    if (const auto* fp = w.finite_data()) {
        // v'(g mod p) = ord_t N(g mod p) = ord_t Res_X(p, g): kappa_p is
        // totally ramified over C((t)) with residue degree 1.
        BiPoly num = f.num();
        BiPoly den = f.den();
        strip_factor(num, fp->p);
        strip_factor(den, fp->p);
        const int order = t_order(resultant_x(fp->p, num)) - t_order(resultant_x(fp->p, den));
        return Parity{parity_of(order)};
    }
    return Parity{parity_of(t_order(f.num().x_leading()) - t_order(f.den().x_leading()))};
}

RatFun uniformizer(const Place& w) {
    if (const auto* m = w.monomial_data()) {
        // Smallest |alpha| + |beta| with a*alpha + b*beta = 1, ties to larger alpha.
        int best_alpha = 0, best_beta = 0, best_cost = -1;
        for (int beta = -2 * m->a - 2; beta <= 2 * m->a + 2; ++beta) {
            const long long rest = 1 - static_cast<long long>(m->b) * beta;
            if (rest % m->a != 0) continue;
            const int alpha = static_cast<int>(rest / m->a);
            const int cost = std::abs(alpha) + std::abs(beta);
            if (best_cost < 0 || cost < best_cost || (cost == best_cost && alpha > best_alpha)) {
                best_alpha = alpha;
                best_beta = beta;
                best_cost = cost;
            }
        }
        const RatFun centred = RatFun(BiPoly::X() - BiPoly::from_t(m->shift));
        return pow(RatFun::t(), best_alpha) * pow(centred, best_beta);
    }
    if (const auto* fp = w.finite_data()) return RatFun(fp->p);
    return RatFun::X().inverse();
}

ResidueFieldDesc residue_field(const Place& w) {
    if (const auto* m = w.monomial_data()) return RationalCz{-m->b, m->a};
    if (const auto* fp = w.finite_data()) return LocalKappa{fp->p, fp->p.deg_x(), false};
    return LocalKappa{BiPoly{}, 1, true};
}

int pi_value(const Place& w) {
    if (const auto* m = w.monomial_data()) return m->a;
    return 0;
}

int omega_membership(const Place& w) { return pi_value(w); }

std::string to_string(const Place& w) {
    if (const auto* m = w.monomial_data()) {
        std::string s = "mono(" + std::to_string(m->a) + "," + std::to_string(m->b);
        if (!m->shift.is_zero()) s += ",shift=" + to_string(m->shift, 't');
        return s + ")";
    }
    if (const auto* fp = w.finite_data()) return "p(" + to_string(fp->p) + ")";
    return "inf";
}

}  // namespace isotropy
