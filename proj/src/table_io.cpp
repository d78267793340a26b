#include "sympow/table_io.hpp"

#include <fstream>

#include "sympow/catalog.hpp"

namespace sympow {

using nlohmann::json;

namespace {

// Bit-exact integers only; floats (even integral ones like 2.0) are rejected.
long strict_int(const json& j, const char* where) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(where) + ": expected an exact integer, got " +
                                j.dump());
  return j.get<long>();
}

std::vector<long> strict_int_array(const json& j, const char* where) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(where) + ": expected an array");
  std::vector<long> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(strict_int(v, where));
  return out;
}

}  // namespace

nlohmann::json table_to_json(const CharTable& t) {
  json j;
  j["name"] = t.name();
  j["order"] = t.order();
  j["exponent"] = t.exponent();
  json classes = json::array();
  for (const auto& c : t.classes())
    classes.push_back({{"name", c.name}, {"size", c.size}, {"rep_order", c.rep_order}});
  j["classes"] = std::move(classes);
  j["power_maps"] = json::array();
  for (long k = 0; k < t.exponent(); ++k) {
    json row = json::array();
    for (long c = 0; c < t.num_classes(); ++c) row.push_back(t.power_class(k, c));
    j["power_maps"].push_back(std::move(row));
  }
  json irr = json::array();
  for (long i = 0; i < t.num_classes(); ++i) {
    json row = json::array();
    for (long c = 0; c < t.num_classes(); ++c) {
      const CycNumber& v = t.value(i, c);
      json coeffs = json::array();
      for (long p = 0; p < t.exponent(); ++p) {
        Rat coef = p < static_cast<long>(v.coeffs().size()) ? v.coeffs()[static_cast<size_t>(p)]
                                                            : Rat(0);
        if (!is_integral(coef))
          throw std::domain_error("table_to_json: non-integral character value");
        coeffs.push_back(static_cast<long>(to_int(coef).get_si()));
      }
      row.push_back(std::move(coeffs));
    }
    irr.push_back(std::move(row));
  }
  j["irreducibles"] = std::move(irr);
  if (t.has_cayley()) {
    json mult = json::array();
    const CayleyTable& g = t.cayley();
    for (long a = 0; a < g.size(); ++a) {
      json row = json::array();
      for (long b = 0; b < g.size(); ++b) row.push_back(g.mul(a, b));
      mult.push_back(std::move(row));
    }
    j["cayley"] = std::move(mult);
    json reps = json::array();
    for (long c = 0; c < t.num_classes(); ++c) reps.push_back(t.class_rep(c));
    j["class_reps"] = std::move(reps);
  }
  return j;
}

ValidationResult table_from_json(const json& j) {
  std::vector<std::string> errors;
  CharTableData d;
  try {
    d.name = j.at("name").get<std::string>();
    d.order = strict_int(j.at("order"), "order");
    d.exponent = strict_int(j.at("exponent"), "exponent");
    for (const auto& c : j.at("classes")) {
      ConjClass cc;
      cc.name = c.at("name").get<std::string>();
      cc.size = strict_int(c.at("size"), "class size");
      cc.rep_order = strict_int(c.at("rep_order"), "class rep_order");
      d.classes.push_back(std::move(cc));
    }
    for (const auto& row : j.at("power_maps"))
      d.power_maps.push_back(strict_int_array(row, "power_maps"));
    if (d.exponent < 1) return {nullptr, {"exponent must be >= 1"}};
    for (const auto& row : j.at("irreducibles")) {
      std::vector<CycNumber> vals;
      for (const auto& val : row) {
        auto coeffs = strict_int_array(val, "irreducible value");
        if (static_cast<long>(coeffs.size()) != d.exponent)
          return {nullptr,
                  {"character value coefficient arrays must have length exponent = " +
                   std::to_string(d.exponent)}};
        std::vector<Rat> raw;
        raw.reserve(coeffs.size());
        for (long x : coeffs) raw.emplace_back(x);
        vals.emplace_back(d.exponent, std::move(raw));
      }
      d.irreducibles.push_back(std::move(vals));
    }
    if (j.contains("cayley")) {
      std::vector<std::vector<long>> mult;
      for (const auto& row : j.at("cayley")) mult.push_back(strict_int_array(row, "cayley"));
      d.cayley = std::make_shared<const CayleyTable>(std::move(mult));
      if (!j.contains("class_reps"))
        return {nullptr, {"cayley table requires class_reps"}};
      d.class_reps = strict_int_array(j.at("class_reps"), "class_reps");
    }
  } catch (const std::exception& ex) {
    return {nullptr, {std::string("malformed table json: ") + ex.what()}};
  }
  return validate_char_table(std::move(d));
}

TablePtr load_table(const std::string& name_or_path) {
  if (catalog_has(name_or_path)) return catalog_table(name_or_path);
  std::ifstream in(name_or_path);
  if (!in)
    throw TableLoadError("cannot open table '" + name_or_path +
                         "' (not a catalog name, not a readable file)");
  json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw TableLoadError("table file '" + name_or_path + "': " + ex.what());
  }
  ValidationResult r = table_from_json(j);
  if (!r.ok())
    throw TableLoadError("table file '" + name_or_path + "' failed validation", r.errors);
  return r.table;
}

void save_table(const CharTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_table: cannot write " + path);
  out << table_to_json(t).dump(2) << "\n";
}

}  // namespace sympow
