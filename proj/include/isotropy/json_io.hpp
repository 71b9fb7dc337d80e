#pragma once

#include "isotropy/factory.hpp"
#include "isotropy/form.hpp"
#include "isotropy/place.hpp"
#include "isotropy/springer.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace isotropy {

using Json = nlohmann::ordered_json;

/// {"isotropic", "split", "residue_field", "certificate"}.
Json verdict_to_json(const Verdict& v);
/// Inverse of verdict_to_json; throws ParseError on malformed input.
Verdict verdict_from_json(const Json& j);

std::string print_verdict(const Verdict& v);
Verdict parse_verdict(std::string_view text);

ResidueFieldDesc parse_residue_field(std::string_view text);

/// The `check` output: {"form", "place", "isotropic", "split",
/// "residue_field", "certificate"}.
Json check_to_json(const DiagForm& form, const Place& w, const Verdict& v);

/// Canonical body carries no timing unless `with_timing`.
Json report_to_json(const TheoremReport& report, bool with_timing = false);
std::string report_to_text(const TheoremReport& report);

/// A place-family file is a JSON array of place strings.
std::vector<Place> parse_place_list(std::string_view json_text);
Json place_list_to_json(const std::vector<Place>& places);

}  // namespace isotropy
