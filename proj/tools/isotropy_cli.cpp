// Command-line driver: local isotropy decisions, the phi_r family, the
// finite-family counterexample, supports, witness search and the theorem harness.

#include "isotropy/expr.hpp"
#include "isotropy/factory.hpp"
#include "isotropy/json_io.hpp"
#include "isotropy/parallel.hpp"
#include "isotropy/springer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace isotropy;

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitInternal = 1;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct FamilyFlags {
    std::string places_file;
    std::vector<std::string> places;
    int a_max = 3;
    int b_max = 3;
    bool no_infinity = false;

    void add(CLI::App* cmd, int default_a_max) {
        a_max = default_a_max;
        auto* file = cmd->add_option("--places", places_file, "JSON array of place strings");
        auto* inline_places = cmd->add_option("--place", places, "a place (repeatable)");
        file->excludes(inline_places);
        auto* amax = cmd->add_option("--amax", a_max, "generated family: max weight of t")->capture_default_str();
        auto* bmax = cmd->add_option("--bmax", b_max, "generated family: max |weight of X|")->capture_default_str();
        auto* noinf = cmd->add_flag("--no-infinity", no_infinity, "generated family: omit the infinite place");
        for (auto* opt : {amax, bmax, noinf}) {
            opt->excludes(file);
            opt->excludes(inline_places);
        }
    }

    PlaceFamily family() const {
        if (!places_file.empty()) return PlaceFamily{parse_place_list(read_file(places_file))};
        if (!places.empty()) {
            std::vector<Place> list;
            for (const auto& p : places) list.push_back(parse_place(p));
            return PlaceFamily{list};
        }
        FamilyBounds b = default_bounds(a_max);
        b.b_abs_max = b_max;
        b.include_infinity = !no_infinity;
        return PlaceFamily{b};
    }
};

void print_part(std::ostream& os, const char* name, const SpringerPart& part, const ResidueDecision& d) {
    os << name << " part (dim " << part.indices.size() << "):";
    for (std::size_t k = 0; k < part.indices.size(); ++k)
        os << (k ? ", " : " ") << "[" << part.indices[k] << "] " << to_string(part.form.coeffs[k]);
    os << " -> " << to_string(d.rule) << (d.isotropic ? " (isotropic)" : " (anisotropic)") << '\n';
}

void print_verdict_text(std::ostream& os, const DiagForm& form, const Place& w, const Verdict& v) {
    os << "form: " << to_string(form) << '\n';
    os << "place: " << to_string(w) << '\n';
    os << "isotropic: " << (v.isotropic ? "true" : "false") << '\n';
    os << "split: even " << v.even_dim() << ", odd " << v.odd_dim() << '\n';
    os << "residue field: " << to_string(v.residue_field()) << '\n';
    print_part(os, "even", v.even, v.even_decision);
    print_part(os, "odd", v.odd, v.odd_decision);
    os << "certificate: " << to_string(v.rule);
    if (v.part) os << " in the " << to_string(*v.part) << " part";
    if (!v.witness.empty()) os << ", coefficients " << v.witness[0] << " and " << v.witness[1];
    os << '\n';
}

Json places_json(const std::vector<Place>& places) { return place_list_to_json(places); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isotropy of diagonal quadratic forms over completions of C((t))(X)"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string form_text, place_text;
    auto* check = app.add_subcommand("check", "decide isotropy of a form at one place");
    check->add_option("--form", form_text, "comma-separated coefficients")->required();
    check->add_option("--place", place_text, "mono(a,b[,shift=c]) | p(expr) | inf")->required();

    int r = 1;
    auto* phi = app.add_subcommand("phi", "print the form phi_r");
    phi->add_option("--r", r, "r >= 1")->required();

    auto* intro = app.add_subcommand("intro", "print the introductory form");

    FamilyFlags cor_flags;
    auto* cor = app.add_subcommand("corollary1", "construct phi_r for a finite place family");
    cor_flags.add(cor, 0);

    std::string f_text;
    FamilyFlags sup_flags;
    auto* sup = app.add_subcommand("support", "places of a family where f has nonzero valuation");
    sup->add_option("--f", f_text, "rational function in t, X")->required();
    sup_flags.add(sup, 1);

    std::string witness_form;
    FamilyFlags wit_flags;
    unsigned jobs = default_parallelism();
    auto* wit = app.add_subcommand("witness", "first place of a family where the form is anisotropic");
    wit->add_option("--form", witness_form, "comma-separated coefficients")->required();
    wit->add_option("--jobs", jobs, "worker threads");
    wit_flags.add(wit, 3);

    int r_max = 5;
    std::uint64_t seed = 0;
    std::size_t random_count = 8;
    bool timing = false;
    auto* verify = app.add_subcommand("verify-theorem", "check phi_r on sampled places of Omega_(r-1)");
    verify->add_option("--rmax", r_max, "largest r")->capture_default_str();
    verify->add_option("--seed", seed, "seed for extra random places")->capture_default_str();
    verify->add_option("--random-places", random_count, "number of extra random places")->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--timing", timing, "include elapsed time in JSON output");

    for (auto* sub : {check, phi, intro, cor, sup, wit, verify})
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }
    const bool json = format == "json";

    try {
        if (*check) {
            const DiagForm form = parse_form(form_text);
            const Place w = parse_place(place_text);
            const Verdict v = decide_local_isotropy(form, w);
            if (json) {
                std::cout << check_to_json(form, w, v).dump(2) << '\n';
            } else {
                print_verdict_text(std::cout, form, w, v);
            }
        } else if (*phi || *intro) {
            const DiagForm form = *phi ? phi_r(r) : intro_example();
            if (json) {
                Json j;
                if (*phi) j["r"] = r;
                j["form"] = coefficient_strings(form);
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << to_string(form) << '\n';
            }
        } else if (*cor) {
            const PlaceFamily family = cor_flags.family();
            const Corollary1Result res = corollary1_construct(family);
            if (json) {
                Json j;
                j["family"] = places_json(expand(family));
                j["r"] = res.r;
                j["form"] = coefficient_strings(res.form);
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "r = " << res.r << '\n' << to_string(res.form) << '\n';
            }
        } else if (*sup) {
            const RatFun f = parse_ratfun(f_text);
            if (f.is_zero()) throw InputError("support of the zero function");
            const auto places = support(f, sup_flags.family());
            if (json) {
                Json j;
                j["f"] = to_string(f);
                Json items = Json::array();
                for (const auto& w : places) items.push_back(Json{{"place", to_string(w)}, {"valuation", valuation(w, f)}});
                j["support"] = items;
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& w : places) std::cout << to_string(w) << "  " << valuation(w, f) << '\n';
            }
        } else if (*wit) {
            const DiagForm form = parse_form(witness_form);
            const auto found = witness_search(form, wit_flags.family(), jobs);
            if (json) {
                Json j;
                j["form"] = coefficient_strings(form);
                if (found) {
                    j["witness"] = to_string(found->place);
                    j["verdict"] = verdict_to_json(found->verdict);
                } else {
                    j["witness"] = nullptr;
                }
                std::cout << j.dump(2) << '\n';
            } else if (found) {
                std::cout << "anisotropic at " << to_string(found->place) << '\n';
                print_verdict_text(std::cout, form, found->place, found->verdict);
            } else {
                std::cout << "no anisotropic place in the family\n";
            }
        } else if (*verify) {
            VerifyOptions opts;
            opts.r_max = r_max;
            opts.seed = seed;
            opts.random_places = random_count;
            opts.workers = jobs;
            const TheoremReport report = verify_theorem(opts);
            if (json) {
                std::cout << report_to_json(report, timing).dump(2) << '\n';
            } else {
                std::cout << report_to_text(report);
            }
            if (!report.ok()) return kExitInternal;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
