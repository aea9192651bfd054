#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "zgu/chartab.hpp"
#include "zgu/help.hpp"
#include "zgu/perm.hpp"
#include "zgu/report.hpp"

namespace zgu {

using Json = nlohmann::json;

/// Group file: {"name": ..., "degree": n, "generators": [[images...], ...]}.
/// Throws Error("ParseError") naming the first bad generator, or
/// Error("DegreeMismatch").
PermGroup group_from_json(const Json &j);
Json group_to_json(const PermGroup &g);

/// Rational: integer, "a/b" string or [a, b].
Rational rational_from_json(const Json &j);
Json rational_to_json(const Rational &r);

/// Cyclotomic: a rational, or {"conductor": n, "coeffs": {"k": rational, ...}}
/// meaning sum_k c_k zeta_n^k.
Cyclotomic cyclotomic_from_json(const Json &j);
Json cyclotomic_to_json(const Cyclotomic &c);

/// {"name", "group_order", "classes": [{"name", "size", "order"}],
///  "power_maps": {"p": [...]}, "characters": [[...]], "schur_indices"?}
CharacterTable table_from_json(const Json &j);
Json table_to_json(const CharacterTable &t);

/// Nonzero entries keyed by class name.
Json pav_to_json(const PAVector &pav, const ClassTable &classes);
PAVector pav_from_json(const Json &j, const ClassTable &classes);
Json candidate_to_json(const TorsionUnitCandidate &cand, const ClassTable &classes);
Json admissible_to_json(const AdmissibleSet &set, const ClassTable &classes);

Json report_to_json(const ObstructionReport &r);
ObstructionReport report_from_json(const Json &j);

/// Reads and parses a JSON file; Error("ParseError") on failure.
Json read_json_file(const std::filesystem::path &path);

/// Directory holding the bundled groups/ and tables/.
std::filesystem::path data_dir();
/// Overrides the compiled-in data directory (used by the Python package).
void set_data_dir(std::filesystem::path dir);
/// A path, or the name of a bundled file (e.g. "a7") in data_dir()/sub.
std::filesystem::path resolve_data(const std::string &name_or_path, const std::string &sub);

} // namespace zgu
