#include "isotropy/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isotropy {

namespace {
const Rat kZero{0};
}

UPoly::UPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

UPoly::UPoly(std::initializer_list<Rat> coeffs_low_to_high) : coeffs_(coeffs_low_to_high) {
    trim();
}

UPoly::UPoly(std::vector<Rat> coeffs_low_to_high) : coeffs_(std::move(coeffs_low_to_high)) {
    trim();
}

UPoly UPoly::monomial(const Rat& c, int degree) {
    if (degree < 0) throw std::domain_error("negative monomial degree");
    UPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.coeffs_.back() = c;
    return p;
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& UPoly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return UPoly(std::move(out));
}

UPoly operator*(const Rat& c, UPoly a) { return a *= c; }

bool canonical_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

UPoly pow(const UPoly& p, int e) {
    if (e < 0) throw std::domain_error("negative polynomial power");
    UPoly result = Rat(1);
    UPoly base = p;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UPoly{}, a};
    std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1, Rat(0));
    const Rat lc_inv = 1 / b.leading();
    for (int k = da; k >= db; --k) {
        const Rat q = rem[static_cast<std::size_t>(k)] * lc_inv;
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool divides(const UPoly& d, const UPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

UPoly monic(const UPoly& p) {
    if (p.is_zero()) return p;
    return (1 / p.leading()) * p;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    UPoly x = monic(a), y = monic(b);
    while (!y.is_zero()) {
        UPoly r = monic(divmod(x, y).second);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

UPoly derivative(const UPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rat> out(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = p.coeff(k) * k;
    return UPoly(std::move(out));
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero");
    if (p.is_constant()) return Rat(1);
    return monic(exact_div(p, gcd(p, derivative(p))));
}

UPoly odd_multiplicity_part(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    if (p.is_constant()) return Rat(1);
    const UPoly dp = derivative(p);
    const UPoly a0 = gcd(p, dp);
    UPoly b = exact_div(p, a0);
    UPoly d = exact_div(dp, a0) - derivative(b);
    UPoly odd = Rat(1);
    for (int i = 1; !b.is_constant(); ++i) {
        const UPoly a = gcd(b, d);
        if (i % 2 == 1) odd *= a;
        b = exact_div(b, a);
        d = exact_div(d, a) - derivative(b);
    }
    return monic(odd);
}

int t_order(const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("order of the zero polynomial");
    int k = 0;
    while (g.coeff(k) == 0) ++k;
    return k;
}

Rat eval(const UPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

UPoly compose(const UPoly& p, const UPoly& q) {
    UPoly acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * q + UPoly(p.coeff(k));
    return acc;
}

UPoly truncate(const UPoly& p, int n) {
    if (n <= 0) return {};
    std::vector<Rat> c(p.coeffs().begin(), p.coeffs().begin() + std::min<int>(n, p.degree() + 1));
    return UPoly(std::move(c));
}

std::string to_string(const UPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeff(k);
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace isotropy
