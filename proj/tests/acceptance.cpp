// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "isotropy/expr.hpp"
#include "isotropy/factory.hpp"
#include "isotropy/json_io.hpp"
#include "isotropy/kernel.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace isotropy;
using namespace isotropy::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

struct Run {
    std::string out;
    int code = -1;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(ISOTROPY_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// AC1: phi_r isotropic on the sampled part of Omega_(r-1), anisotropic at mono(r,1).
void theorem(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (int r = 1; r <= 5; ++r) {
        const DiagForm phi = phi_r(r);
        for (const auto& w : expand(PlaceFamily{default_bounds(r - 1)})) {
            if (omega_membership(w) > r - 1) continue;
            ++checked;
            o.require(decide_local_isotropy(phi, w).isotropic, "r=" + std::to_string(r) + " anisotropic at " + to_string(w));
        }
        o.require(!decide_local_isotropy(phi, Place::monomial(r, 1)).isotropic,
                  "r=" + std::to_string(r) + " isotropic at witness");
    }
    VerifyOptions opt;
    opt.r_max = 5;
    const TheoremReport report = verify_theorem(opt);
    o.require(report.ok(), "verify_theorem reported violations");
    const double secs = seconds_since(start);
    o.require(secs <= 60.0, "took longer than 60 s");
    o.detail << checked << " (r, place) pairs checked, 5 witness places checked, harness "
             << (report.ok() ? "ok" : "FAILED") << ", " << std::fixed;
    o.detail.precision(2);
    o.detail << secs << " s";
}

// AC2: the introductory form.
void intro(Outcome& o) {
    const DiagForm form = intro_example();
    const std::vector<Place> trivial = expand(PlaceFamily{default_bounds(0)});
    for (const auto& w : trivial) o.require(decide_local_isotropy(form, w).isotropic, "anisotropic at " + to_string(w));
    const auto found = witness_search(form, PlaceFamily{default_bounds(3)});
    o.require(found && found->place == Place::monomial(1, 0) && !found->verdict.isotropic, "witness is not mono(1,0)");
    o.detail << "isotropic at " << trivial.size() << " E-trivial places; witness "
             << (found ? to_string(found->place) : std::string("none"));
}

// AC3: the finite-family construction on random families.
void finite_families(Outcome& o) {
    Rng rng(2024);
    std::size_t members = 0;
    std::map<int, int> by_r;
    for (int k = 0; k < 50; ++k) {
        std::vector<Place> family;
        for (int n = rng.in(1, 6); n > 0; --n) family.push_back(rng.place());
        const auto [r, phi] = corollary1_construct(PlaceFamily{family});
        ++by_r[r];
        for (const auto& w : family) {
            ++members;
            o.require(decide_local_isotropy(phi, w).isotropic, "family " + std::to_string(k) + ": anisotropic at " + to_string(w));
        }
        o.require(!decide_local_isotropy(phi, Place::monomial(r, 1)).isotropic,
                  "family " + std::to_string(k) + ": isotropic at mono(r,1)");
    }
    o.detail << "50 families, " << members << " members; r distribution";
    for (const auto& [r, n] : by_r) o.detail << " " << r << ":" << n;
}

// Random polynomial with mostly positive coefficients.
BiPoly positive_biased(Rng& rng) {
    BiPoly f;
    while (f.is_zero()) {
        for (int n = rng.in(1, 4); n > 0; --n) {
            const int i = rng.in(0, 3);
            const int j = rng.in(0, 3);
            const int c = rng.in(1, 5);
            const int d = rng.in(1, 3);
            Rat q(rng.chance(85) ? c : -c, d);
            q.canonicalize();
            f += BiPoly::monomial(q, i, j);
        }
    }
    return f;
}

// AC4: parity data against truncated-series square roots.
void parity_oracle(Outcome& o) {
    Rng rng(4);
    int squares = 0;
    int nonsquares = 0;
    int inconclusive = 0;
    std::map<std::string, int> reasons;
    const int total = 320;
    for (int k = 0; k < total; ++k) {
        const Place w = rng.small_finite_point();
        const BiPoly& p = w.finite_data()->p;
        const RootSeries root = root_series(p);
        BiPoly num, den;
        UPoly n_s, d_s;
        do {
            num = positive_biased(rng);
            n_s = eval_at_root(num, root);
        } while (n_s.is_zero());
        do {
            den = positive_biased(rng);
            d_s = eval_at_root(den, root);
        } while (d_s.is_zero());
        const RatFun f(num, den);
        if (valuation(w, f) != 0) {
            o.require(false, "root series and valuation disagree on " + to_string(f));
            continue;
        }
        const int parity = std::get<Parity>(residue_unit(w, f)).value;
        // num/den and num*den share a square class
        const HenselOutcome h = hensel_sqrt_oracle(n_s * d_s, 64);
        if (h.kind == HenselOutcome::Kind::Inconclusive) {
            ++inconclusive;
            ++reasons[h.reason];
            continue;
        }
        const bool square = h.kind == HenselOutcome::Kind::Square;
        ++(square ? squares : nonsquares);
        o.require(square == (parity == 0), "parity " + std::to_string(parity) + " vs oracle at " + to_string(w) +
                                               " for " + to_string(f));
    }
    const double rate = static_cast<double>(inconclusive) / total;
    o.require(rate <= 0.20, "inconclusive rate above 20%");
    o.detail << total << " units, conclusive " << squares << " squares + " << nonsquares << " non-squares, "
             << inconclusive << " inconclusive ("
             << static_cast<int>(rate * 100 + 0.5) << "%)";
    for (const auto& [why, n] : reasons) o.detail << "; " << why << ": " << n;
}

// AC5: algebraic invariants.
void invariants(Outcome& o) {
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
        const Place w = rng.place();
        const RatFun f = rng.nonzero_ratfun();
        const RatFun g = rng.nonzero_ratfun();
        const int vf = valuation(w, f);
        const int vg = valuation(w, g);
        o.require(valuation(w, f * g) == vf + vg, "w(fg) at " + to_string(w));
        if (!(f + g).is_zero()) o.require(valuation(w, f + g) >= std::min(vf, vg), "ultrametric at " + to_string(w));
    }
    for (int k = 0; k < 1000; ++k) {
        const Place w = rng.place();
        const RatFun pi = uniformizer(w);
        RatFun f = rng.nonzero_ratfun();
        RatFun g = rng.nonzero_ratfun();
        f = f * pow(pi, -valuation(w, f));
        g = g * pow(pi, -valuation(w, g));
        const ResidueElem rf = residue_unit(w, f);
        const ResidueElem rg = residue_unit(w, g);
        const ResidueElem rfg = residue_unit(w, f * g);
        if (const auto* pf = std::get_if<Parity>(&rf)) {
            o.require(std::get<Parity>(rfg).value == (pf->value + std::get<Parity>(rg).value) % 2,
                      "parity product at " + to_string(w));
        } else {
            o.require(std::get<UniRatFun>(rfg) == std::get<UniRatFun>(rf) * std::get<UniRatFun>(rg),
                      "residue product at " + to_string(w));
        }
    }
    int resultants = 0;
    while (resultants < 1000) {
        const int d = rng.in(1, 3);
        BiPoly p = pow(BiPoly::X(), d);
        for (int j = 0; j < d; ++j) p += BiPoly::monomial(rng.rat(), rng.in(0, 2), j);
        const BiPoly g = rng.nonzero_bipoly(2, 3, 3);
        const BiPoly h = rng.nonzero_bipoly(2, 3, 3);
        UPoly rg, rh, rgh;
        try {
            rg = resultant_x(p, g);
            rh = resultant_x(p, h);
            rgh = resultant_x(p, g * h);
        } catch (const std::domain_error&) {
            continue;  // common factor with p
        }
        ++resultants;
        o.require(rgh == rg * rh, "resultant multiplicativity for p = " + to_string(p));
    }
    for (int k = 0; k < 1000; ++k) {
        const BiPoly f = rng.nonzero_bipoly(2, 2, 3) * rng.nonzero_bipoly(1, 2, 2);
        const BiPoly sf = squarefree_part(f);
        o.require(try_exact_div(f, sf).has_value(), "squarefree part does not divide " + to_string(f));
        o.require(try_exact_div(pow(sf, f.total_degree()), f).has_value(), "f does not divide sf^deg for " + to_string(f));
    }
    o.detail << "1000 instances each: valuation axioms, residue multiplicativity, resultant multiplicativity, radical divisibility";
}

DiagForm map_form(const DiagForm& form, const std::function<RatFun(std::size_t, const RatFun&)>& fn) {
    std::vector<RatFun> c;
    for (std::size_t i = 0; i < form.dim(); ++i) c.push_back(fn(i, form[i]));
    return DiagForm(std::move(c));
}

// AC6: invariance of the local decision.
void decision_invariance(Outcome& o) {
    Rng rng(6);
    int iso = 0;
    for (int k = 0; k < 200; ++k) {
        const DiagForm form = rng.form(rng.in(2, 5));
        const Place w = rng.place();
        const bool v = decide_local_isotropy(form, w).isotropic;
        iso += v;
        const std::string where = to_string(w) + " for " + to_string(form);

        const RatFun lambda = rng.nonzero_ratfun();
        o.require(decide_local_isotropy(map_form(form, [&](std::size_t, const RatFun& a) { return lambda * a; }), w).isotropic == v,
                  "scaling at " + where);

        std::vector<RatFun> perm = form.coeffs();
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        std::swap(perm.front(), perm.back());
        o.require(decide_local_isotropy(DiagForm(perm), w).isotropic == v, "permutation at " + where);

        std::vector<RatFun> squares;
        for (std::size_t i = 0; i < form.dim(); ++i) squares.push_back(rng.nonzero_ratfun());
        o.require(decide_local_isotropy(map_form(form, [&](std::size_t i, const RatFun& a) { return a * squares[i] * squares[i]; }), w)
                          .isotropic == v,
                  "square multipliers at " + where);

        // shift coherence on a shifted monomial place of positive X-weight
        const int a = rng.in(1, 4);
        int b = rng.in(1, 4);
        while (std::gcd(a, b) != 1) b = rng.in(1, 4);
        const Place shifted = Place::monomial(a, b, rng.t_poly(2));
        const UPoly c = shifted.monomial_data()->shift;
        o.require(decide_local_isotropy(form, shifted).isotropic ==
                      decide_local_isotropy(map_form(form, [&](std::size_t, const RatFun& x) { return shift_x(x, c); }),
                                            Place::monomial(a, b))
                          .isotropic,
                  "shift coherence at " + to_string(shifted));
    }
    o.detail << "200 (form, place) pairs (" << iso << " isotropic): scaling, permutation, square multipliers, shift coherence";
}

// AC7: printing round-trips and positioned errors.
void surface_syntax(Outcome& o) {
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const RatFun f = rng.nonzero_ratfun(3, 3, 4);
        o.require(parse_ratfun(to_string(f)) == f, "ratfun " + to_string(f));
        const DiagForm form = rng.form(rng.in(1, 5));
        o.require(parse_form(to_string(form)) == form, "form " + to_string(form));
        const Place w = rng.place();
        o.require(parse_place(to_string(w)) == w, "place " + to_string(w));
        const Verdict v = decide_local_isotropy(rng.form(rng.in(1, 5)), rng.place());
        o.require(parse_verdict(print_verdict(v)) == v, "verdict");
    }

    struct Malformed {
        std::string args;
        std::string expect;
    };
    const Malformed cases[] = {
        {"check --form \"X^^2\" --place inf", "offset 2"},
        {"check --form \"X, 0\" --place inf", "form must be regular"},
        {"check --form X --place \"mono(2,4)\"", "not coprime"},
    };
    for (const auto& m : cases) {
        const Run r = run_cli(m.args);
        o.require(r.code == 2 && r.out.find(m.expect) != std::string::npos && r.out.find("offset ") != std::string::npos,
                  "CLI `" + m.args + "` gave code " + std::to_string(r.code) + ": " + r.out);
    }
    o.detail << "500 round-trips each for RatFun, DiagForm, Place, Verdict; 3 malformed inputs rejected with exit 2";
}

// AC8: verify-theorem output independent of --jobs.
void job_independence(Outcome& o) {
    for (const char* fmt : {"text", "json"}) {
        const std::string base = std::string("verify-theorem --rmax 5 --seed 17 --format ") + fmt;
        const Run one = run_cli(base + " --jobs 1");
        const Run many = run_cli(base + " --jobs 4");
        o.require(one.code == 0 && many.code == 0, std::string("non-zero exit in ") + fmt);
        o.require(!one.out.empty() && one.out == many.out, std::string("outputs differ in ") + fmt);
        o.detail << fmt << " " << one.out.size() << " bytes identical; ";
    }
    o.detail << "--jobs 1 vs --jobs 4";
}

}  // namespace

int main() {
    const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
        {"AC1", theorem},      {"AC2", intro},      {"AC3", finite_families},    {"AC4", parity_oracle},
        {"AC5", invariants},   {"AC6", decision_invariance}, {"AC7", surface_syntax}, {"AC8", job_independence},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        std::cout << name << (o.pass ? " PASS: " : " FAIL: ") << o.detail.str() << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        std::cout.flush();
        failed += !o.pass;
    }
    return failed;
}
