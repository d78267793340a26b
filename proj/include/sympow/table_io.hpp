// Character-table JSON files.
//
// Fields: name, order, exponent, classes [{name,size,rep_order}], power_maps
// (exponent-many index arrays), irreducibles (rows of values; each value is
// an integer coefficient array of length exponent over zeta^0..zeta^{e-1},
// reduced on load), optional cayley (n x n index table) with class_reps.
// Integers are bit-exact; no floats anywhere.
#pragma once

#include <string>

#include <json.hpp>

#include "sympow/char_table.hpp"

namespace sympow {

nlohmann::json table_to_json(const CharTable& t);
ValidationResult table_from_json(const nlohmann::json& j);

struct TableLoadError : std::runtime_error {
  explicit TableLoadError(const std::string& what, std::vector<std::string> errs = {})
      : std::runtime_error(what), errors(std::move(errs)) {}
  std::vector<std::string> errors;
};

// Catalog name or path to a JSON table file; throws TableLoadError on
// parse/validation failure.
TablePtr load_table(const std::string& name_or_path);

void save_table(const CharTable& t, const std::string& path);

}  // namespace sympow
