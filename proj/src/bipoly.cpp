#include "isotropy/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isotropy {

namespace {
const Rat kZero{0};
}

BiPoly::BiPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rat& c, int t_exp, int x_exp) {
    if (t_exp < 0 || x_exp < 0) throw std::domain_error("negative exponent in polynomial");
    BiPoly p;
    if (c != 0) p.terms_.emplace(Exponent{t_exp, x_exp}, c);
    return p;
}

BiPoly BiPoly::from_t(const UPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) != 0) r.terms_.emplace(Exponent{k, 0}, p.coeff(k));
    }
    return r;
}

BiPoly BiPoly::from_x_coeffs(std::span<const UPoly> coeffs) {
    BiPoly r;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const UPoly& c = coeffs[j];
        for (int k = 0; k <= c.degree(); ++k) {
            if (c.coeff(k) != 0) r.terms_.emplace(Exponent{k, static_cast<int>(j)}, c.coeff(k));
        }
    }
    return r;
}

void BiPoly::add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool BiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

int BiPoly::deg_x() const { return terms_.empty() ? -1 : terms_.rbegin()->first.x; }

int BiPoly::deg_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t + e.x);
    return d;
}

const Rat& BiPoly::leading_coefficient() const {
    return terms_.empty() ? kZero : terms_.rbegin()->second;
}

Exponent BiPoly::leading_exponent() const {
    return terms_.empty() ? Exponent{} : terms_.rbegin()->first;
}

UPoly BiPoly::x_coeff(int j) const {
    std::vector<Rat> c;
    auto it = terms_.lower_bound(Exponent{0, j});
    for (; it != terms_.end() && it->first.x == j; ++it) {
        if (static_cast<int>(c.size()) <= it->first.t) c.resize(static_cast<std::size_t>(it->first.t) + 1, Rat(0));
        c[static_cast<std::size_t>(it->first.t)] = it->second;
    }
    return UPoly(std::move(c));
}

std::vector<UPoly> BiPoly::x_coeffs() const {
    std::vector<UPoly> out;
    for (int j = 0; j <= deg_x(); ++j) out.push_back(x_coeff(j));
    return out;
}

UPoly BiPoly::as_t_poly() const {
    if (deg_x() > 0) throw std::domain_error("polynomial depends on X");
    return x_coeff(0);
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            r += BiPoly::monomial(ca * cb, ea.t + eb.t, ea.x + eb.x);
        }
    }
    return r;
}

bool canonical_less(const BiPoly& a, const BiPoly& b) {
    auto ia = a.terms().rbegin();
    auto ib = b.terms().rbegin();
    ExponentOrder less;
    for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().rend() && ib != b.terms().rend();
}

BiPoly pow(const BiPoly& p, int e) {
    if (e < 0) throw std::domain_error("negative polynomial power");
    BiPoly result = Rat(1);
    BiPoly base = p;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

BiPoly diff_x(const BiPoly& f) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (e.x > 0) r += BiPoly::monomial(c * e.x, e.t, e.x - 1);
    }
    return r;
}

BiPoly diff_t(const BiPoly& f) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (e.t > 0) r += BiPoly::monomial(c * e.t, e.t - 1, e.x);
    }
    return r;
}

BiPoly normalize_leading(const BiPoly& f) {
    if (f.is_zero()) return f;
    return (1 / f.leading_coefficient()) * f;
}

std::optional<BiPoly> try_exact_div(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.is_zero()) return BiPoly{};
    std::vector<UPoly> rem = f.x_coeffs();
    const std::vector<UPoly> den = g.x_coeffs();
    const int dg = g.deg_x();
    const int df = f.deg_x();
    if (df < dg) return std::nullopt;
    std::vector<UPoly> quot(static_cast<std::size_t>(df - dg) + 1);
    for (int k = df; k >= dg; --k) {
        const UPoly& lead = rem[static_cast<std::size_t>(k)];
        if (lead.is_zero()) continue;
        auto [q, r] = divmod(lead, den.back());
        if (!r.is_zero()) return std::nullopt;
        for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k - dg + j)] -= q * den[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(k - dg)] = std::move(q);
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) return std::nullopt;
    }
    return BiPoly::from_x_coeffs(quot);
}

BiPoly exact_div(const BiPoly& f, const BiPoly& g) {
    auto q = try_exact_div(f, g);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *std::move(q);
}

UPoly eval_x(const BiPoly& f, const UPoly& c) {
    UPoly acc;
    for (int j = f.deg_x(); j >= 0; --j) acc = acc * c + f.x_coeff(j);
    return acc;
}

BiPoly shift_x(const BiPoly& f, const UPoly& c) {
    if (c.is_zero()) return f;
    const BiPoly lin = BiPoly::X() + BiPoly::from_t(c);
    BiPoly acc;
    for (int j = f.deg_x(); j >= 0; --j) acc = acc * lin + BiPoly::from_t(f.x_coeff(j));
    return acc;
}

UPoly x_content(const BiPoly& f) {
    if (f.is_zero()) throw std::domain_error("content of zero polynomial");
    UPoly g;
    for (const auto& c : f.x_coeffs()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const Rat mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e.t == 0 && e.x == 0) {
            os << mag.get_str();
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        if (e.t > 0) {
            if (need_star) os << '*';
            os << 't';
            if (e.t > 1) os << '^' << e.t;
            need_star = true;
        }
        if (e.x > 0) {
            if (need_star) os << '*';
            os << 'X';
            if (e.x > 1) os << '^' << e.x;
        }
    }
    return os.str();
}

}  // namespace isotropy
