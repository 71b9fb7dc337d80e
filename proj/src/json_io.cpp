#include "isotropy/json_io.hpp"

#include "isotropy/expr.hpp"

#include <iomanip>
#include <sstream>

namespace isotropy {

namespace {

Json part_to_json(const SpringerPart& part, const ResidueDecision& d) {
    Json j;
    j["indices"] = part.indices;
    Json residues = Json::array();
    for (const auto& e : part.form.coeffs) residues.push_back(to_string(e));
    j["residues"] = residues;
    j["decision"] = to_string(d.rule);
    j["isotropic"] = d.isotropic;
    if (d.pair) {
        j["pair"] = Json::array({(*d.pair)[0], (*d.pair)[1]});
    } else {
        j["pair"] = nullptr;
    }
    return j;
}

ResidueRule residue_rule_from(const std::string& s) {
    for (auto r : {ResidueRule::Empty, ResidueRule::DimensionOne, ResidueRule::DimensionAtLeastThree,
                   ResidueRule::EqualSquareClasses, ResidueRule::DistinctSquareClasses}) {
        if (to_string(r) == s) return r;
    }
    throw ParseError(0, "unknown residue rule '" + s + "'");
}

VerdictRule verdict_rule_from(const std::string& s) {
    for (auto r : {VerdictRule::DimensionAtLeastThree, VerdictRule::SquareClassPair, VerdictRule::BothAnisotropic}) {
        if (to_string(r) == s) return r;
    }
    throw ParseError(0, "unknown verdict rule '" + s + "'");
}

ResidueElem residue_from(const ResidueFieldDesc& field, const std::string& s) {
    if (std::holds_alternative<LocalKappa>(field)) {
        if (s == "even") return Parity{0};
        if (s == "odd") return Parity{1};
        throw ParseError(0, "expected parity 'even' or 'odd', got '" + s + "'");
    }
    return parse_unirat(s, 'z');
}

void part_from_json(const Json& j, const ResidueFieldDesc& field, SpringerPart& part, ResidueDecision& d) {
    part.form.field = field;
    part.indices = j.at("indices").get<std::vector<std::size_t>>();
    for (const auto& r : j.at("residues")) part.form.coeffs.push_back(residue_from(field, r.get<std::string>()));
    d.rule = residue_rule_from(j.at("decision").get<std::string>());
    d.isotropic = j.at("isotropic").get<bool>();
    if (!j.at("pair").is_null()) {
        const auto p = j.at("pair").get<std::vector<std::size_t>>();
        if (p.size() != 2) throw ParseError(0, "pair must have two entries");
        d.pair = std::array<std::size_t, 2>{p[0], p[1]};
    }
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["isotropic"] = v.isotropic;
    j["split"] = Json{{"even", v.even_dim()}, {"odd", v.odd_dim()}};
    j["residue_field"] = to_string(v.residue_field());
    Json cert;
    cert["rule"] = to_string(v.rule);
    if (v.part) {
        cert["part"] = to_string(*v.part);
    } else {
        cert["part"] = nullptr;
    }
    cert["witness"] = v.witness;
    cert["even"] = part_to_json(v.even, v.even_decision);
    cert["odd"] = part_to_json(v.odd, v.odd_decision);
    j["certificate"] = cert;
    return j;
}

Verdict verdict_from_json(const Json& j) {
    try {
        Verdict v;
        v.isotropic = j.at("isotropic").get<bool>();
        const ResidueFieldDesc field = parse_residue_field(j.at("residue_field").get<std::string>());
        const Json& cert = j.at("certificate");
        v.rule = verdict_rule_from(cert.at("rule").get<std::string>());
        if (!cert.at("part").is_null()) {
            const auto p = cert.at("part").get<std::string>();
            if (p != "even" && p != "odd") throw ParseError(0, "unknown part '" + p + "'");
            v.part = p == "even" ? PartName::Even : PartName::Odd;
        }
        v.witness = cert.at("witness").get<std::vector<std::size_t>>();
        part_from_json(cert.at("even"), field, v.even, v.even_decision);
        part_from_json(cert.at("odd"), field, v.odd, v.odd_decision);
        if (j.at("split").at("even").get<int>() != v.even_dim() || j.at("split").at("odd").get<int>() != v.odd_dim())
            throw ParseError(0, "split dimensions disagree with the residue forms");
        return v;
    } catch (const Json::exception& e) {
        throw ParseError(0, std::string("malformed verdict: ") + e.what());
    }
}

std::string print_verdict(const Verdict& v) { return verdict_to_json(v).dump(); }

Verdict parse_verdict(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "malformed JSON");
    }
    return verdict_from_json(j);
}

ResidueFieldDesc parse_residue_field(std::string_view text) {
    constexpr std::string_view cz = "C(z), z = ";
    constexpr std::string_view kappa = "kappa(";
    if (text.starts_with(cz)) {
        const RatFun z = parse_ratfun(text.substr(cz.size()));
        const auto& num = z.num();
        const auto& den = z.den();
        if (num.terms().size() != 1 || den.terms().size() != 1 || num.leading_coefficient() != 1 || den.leading_exponent().x != 0)
            throw ParseError(cz.size(), "residue variable must be a monomial t^i X^j");
        return RationalCz{num.leading_exponent().t - den.leading_exponent().t, num.leading_exponent().x};
    }
    if (text.starts_with(kappa)) {
        const auto close = text.rfind("), e = ");
        if (close == std::string_view::npos || close < kappa.size()) throw ParseError(0, "malformed residue field");
        const std::string_view inner = text.substr(kappa.size(), close - kappa.size());
        const int e = std::stoi(std::string(text.substr(close + 7)));
        if (inner == "inf") return LocalKappa{BiPoly{}, e, true};
        const RatFun p = parse_ratfun(inner);
        return LocalKappa{p.num(), e, false};
    }
    throw ParseError(0, "unknown residue field");
}

Json check_to_json(const DiagForm& form, const Place& w, const Verdict& v) {
    Json j;
    j["form"] = coefficient_strings(form);
    j["place"] = to_string(w);
    const Json verdict = verdict_to_json(v);
    for (const auto& [key, value] : verdict.items()) j[key] = value;
    return j;
}

Json report_to_json(const TheoremReport& report, bool with_timing) {
    Json j;
    j["r_max"] = report.r_max;
    j["seed"] = report.seed;
    j["note"] = "finite sample of catalogued places; isotropy is checked on this sample only";
    j["family"] = report.family;
    Json rounds = Json::array();
    for (const auto& r : report.rounds) {
        Json jr;
        jr["r"] = r.r;
        jr["form"] = coefficient_strings(phi_r(r.r));
        jr["sampled"] = r.checks.size();
        jr["isotropic"] = r.isotropic_count;
        jr["violations"] = r.violations;
        jr["witness"] = Json{{"place", r.witness_place}, {"anisotropic", r.witness_anisotropic}};
        Json checks = Json::array();
        for (const auto& c : r.checks) checks.push_back(Json{{"place", c.place}, {"isotropic", c.isotropic}, {"rule", c.rule}});
        jr["checks"] = checks;
        rounds.push_back(jr);
    }
    j["rounds"] = rounds;
    j["violations"] = report.violation_count;
    j["ok"] = report.ok();
    if (with_timing) j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

std::string report_to_text(const TheoremReport& report) {
    std::ostringstream os;
    os << "# finite sample of " << report.family.size() << " catalogued places (seed " << report.seed << ")\n";
    os << std::left << std::setw(4) << "r" << std::setw(10) << "sampled" << std::setw(12) << "isotropic"
       << std::setw(12) << "violations" << "witness\n";
    for (const auto& r : report.rounds) {
        os << std::setw(4) << r.r << std::setw(10) << r.checks.size() << std::setw(12) << r.isotropic_count
           << std::setw(12) << r.violations.size() << r.witness_place
           << (r.witness_anisotropic ? " anisotropic" : " ISOTROPIC (unexpected)") << '\n';
        for (const auto& v : r.violations) os << "    violation: " << v << '\n';
    }
    os << (report.ok() ? "OK" : "FAILED") << '\n';
    return os.str();
}

std::vector<Place> parse_place_list(std::string_view json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "malformed JSON place list");
    }
    if (!j.is_array()) throw ParseError(0, "place list must be a JSON array of strings");
    std::vector<Place> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError(0, "place list must be a JSON array of strings");
        out.push_back(parse_place(item.get<std::string>()));
    }
    return out;
}

Json place_list_to_json(const std::vector<Place>& places) {
    Json j = Json::array();
    for (const auto& w : places) j.push_back(to_string(w));
    return j;
}

}  // namespace isotropy
