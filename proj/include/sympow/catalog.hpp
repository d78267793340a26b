// Bundled character tables: cyclic groups, small abelian products, and the
// standard small non-abelian groups. Character values are data; only class
// structure and power maps are derived from the multiplication tables.
#pragma once

#include <string>
#include <vector>

#include "sympow/char_table.hpp"

namespace sympow {

std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
TablePtr catalog_table(const std::string& name);  // throws on unknown name

}  // namespace sympow
