#include "isotropy/factory.hpp"

#include "isotropy/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

namespace isotropy {

DiagForm phi_r(int r) {
    if (r <= 0) throw std::domain_error("phi_r requires r >= 1");
    const BiPoly t = BiPoly::t();
    const BiPoly X = BiPoly::X();
    const BiPoly Xr = pow(X, static_cast<unsigned>(r));
    return DiagForm({RatFun(Xr - t), RatFun(Xr * X + t), RatFun(t * X), RatFun(X * (Xr + t))});
}

DiagForm intro_example() {
    const BiPoly t = BiPoly::t();
    const BiPoly X = BiPoly::X();
    return DiagForm({RatFun(BiPoly(1) + X), RatFun(t + X), RatFun(t), RatFun(t * X)});
}

Corollary1Result corollary1_construct(const PlaceFamily& family) {
    int max_pi = 0;
    for (const auto& w : expand(family)) max_pi = std::max(max_pi, pi_value(w));
    const int r = 1 + max_pi;
    return {r, phi_r(r)};
}

std::vector<Place> support(const RatFun& f, const PlaceFamily& family) {
    if (f.is_zero()) throw std::domain_error("support of zero");
    std::vector<Place> out;
    for (const auto& w : expand(family)) {
        if (valuation(w, f) != 0) out.push_back(w);
    }
    return out;
}

bool TheoremReport::ok() const {
    if (violation_count != 0) return false;
    return std::all_of(rounds.begin(), rounds.end(), [](const RoundReport& r) { return r.witness_anisotropic; });
}

namespace {

// Portable draws: std::uniform_int_distribution is implementation-defined.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}
    int in(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

UPoly random_t_poly(Draw& draw, int max_degree) {
    std::vector<Rat> c;
    const int deg = draw.in(0, max_degree);
    for (int k = 0; k <= deg; ++k) {
        const int n = draw.in(-3, 3);
        const int d = draw.in(1, 2);
        c.emplace_back(n, d);
        c.back().canonicalize();
    }
    return UPoly(std::move(c));
}

std::vector<Place> random_places(const FamilyBounds& bounds, std::uint64_t seed, std::size_t count) {
    Draw draw(seed);
    std::vector<Place> out;
    for (std::size_t k = 0; k < count; ++k) {
        if (bounds.a_max >= 1 && draw.in(0, 1) == 0) {
            const int a = bounds.b_abs_max == 0 ? 1 : draw.in(1, bounds.a_max);
            int b = draw.in(-bounds.b_abs_max, bounds.b_abs_max);
            while (std::gcd(a, std::abs(b)) != 1) b = draw.in(-bounds.b_abs_max, bounds.b_abs_max);
            out.push_back(Place::monomial(a, b, b > 0 ? random_t_poly(draw, 2) : UPoly{}));
        } else {
            out.push_back(Place::finite_point(BiPoly::X() - BiPoly::from_t(random_t_poly(draw, 2))));
        }
    }
    return out;
}

}  // namespace

TheoremReport verify_theorem(const VerifyOptions& options) {
    if (options.r_max < 1) throw std::domain_error("verify_theorem requires r_max >= 1");
    const auto start = std::chrono::steady_clock::now();
    const FamilyBounds bounds = options.bounds.value_or(default_bounds(options.r_max - 1));

    std::vector<Place> places = expand(PlaceFamily{bounds});
    for (auto& w : random_places(bounds, options.seed, options.random_places)) {
        if (std::find(places.begin(), places.end(), w) == places.end()) places.push_back(std::move(w));
    }

    TheoremReport report;
    report.r_max = options.r_max;
    report.seed = options.seed;
    for (const auto& w : places) report.family.push_back(to_string(w));

    struct Job {
        int r;
        std::size_t place;  // index into places, or npos for the witness
    };
    constexpr std::size_t kWitness = static_cast<std::size_t>(-1);
    std::vector<Job> jobs;
    for (int r = 1; r <= options.r_max; ++r) {
        for (std::size_t i = 0; i < places.size(); ++i) {
            if (omega_membership(places[i]) <= r - 1) jobs.push_back({r, i});
        }
        jobs.push_back({r, kWitness});
    }
    std::vector<DiagForm> forms;
    for (int r = 1; r <= options.r_max; ++r) forms.push_back(phi_r(r));

    auto verdicts = parallel_map<std::optional<Verdict>>(jobs.size(), options.workers, [&](std::size_t k) {
        const Job& job = jobs[k];
        const Place w = job.place == kWitness ? Place::monomial(job.r, 1) : places[job.place];
        return std::optional<Verdict>(decide_local_isotropy(forms[static_cast<std::size_t>(job.r - 1)], w));
    });

    for (int r = 1; r <= options.r_max; ++r) report.rounds.push_back(RoundReport{r, {}, 0, {}, {}, false});
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        RoundReport& round = report.rounds[static_cast<std::size_t>(jobs[k].r - 1)];
        const Verdict& v = *verdicts[k];
        if (jobs[k].place == kWitness) {
            round.witness_place = to_string(Place::monomial(jobs[k].r, 1));
            round.witness_anisotropic = !v.isotropic;
            continue;
        }
        const std::string name = to_string(places[jobs[k].place]);
        round.checks.push_back({name, v.isotropic, to_string(v.rule)});
        if (v.isotropic) {
            ++round.isotropic_count;
        } else {
            round.violations.push_back(name);
            ++report.violation_count;
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace isotropy
