#include "sympow/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sympow {

namespace {

std::vector<std::vector<long>> permutation_mult(const std::vector<std::vector<long>>& perms) {
  const long n = static_cast<long>(perms.size());
  const size_t deg = perms.empty() ? 0 : perms[0].size();
  auto index_of = [&](const std::vector<long>& p) {
    for (long i = 0; i < n; ++i)
      if (perms[static_cast<size_t>(i)] == p) return i;
    throw std::logic_error("catalog: permutation set not closed");
  };
  std::vector<std::vector<long>> mult(static_cast<size_t>(n),
                                      std::vector<long>(static_cast<size_t>(n), 0));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      std::vector<long> comp(deg);
      for (size_t i = 0; i < deg; ++i)
        comp[i] = perms[static_cast<size_t>(a)][static_cast<size_t>(
            perms[static_cast<size_t>(b)][i])];
      mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(comp);
    }
  return mult;
}

std::vector<std::vector<long>> all_perms(long deg, bool even_only) {
  std::vector<long> p(static_cast<size_t>(deg));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<long>> out;
  do {
    long inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    if (!even_only || inv % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Table from a multiplication table, canonical class representatives, and
// hard-coded character rows (integer coefficient vectors over zeta_e powers).
TablePtr build_from_cayley(const std::string& name, std::vector<std::vector<long>> mult,
                           std::vector<long> class_reps, std::vector<std::string> class_names,
                           long expected_exponent,
                           const std::vector<std::vector<std::vector<long>>>& char_rows) {
  auto cay = std::make_shared<const CayleyTable>(std::move(mult));
  const long n = cay->size();
  const long e = cay->exponent();
  if (e != expected_exponent) throw std::logic_error("catalog: unexpected exponent for " + name);

  CharTableData d;
  d.name = name;
  d.order = n;
  d.exponent = e;
  const long nc = static_cast<long>(class_reps.size());
  for (long c = 0; c < nc; ++c) {
    long rep = class_reps[static_cast<size_t>(c)];
    long cls = cay->conjugacy_class_of(rep);
    d.classes.push_back({class_names[static_cast<size_t>(c)],
                         static_cast<long>(cay->conjugacy_classes()[static_cast<size_t>(cls)].size()),
                         cay->element_order(rep)});
  }
  // power maps from the multiplication table
  std::map<long, long> class_index;  // Cayley class -> table class
  for (long c = 0; c < nc; ++c)
    class_index[cay->conjugacy_class_of(class_reps[static_cast<size_t>(c)])] = c;
  if (static_cast<long>(class_index.size()) != nc ||
      nc != static_cast<long>(cay->conjugacy_classes().size()))
    throw std::logic_error("catalog: class representatives do not enumerate the classes of " +
                           name);
  d.power_maps.assign(static_cast<size_t>(e), std::vector<long>(static_cast<size_t>(nc), 0));
  for (long k = 0; k < e; ++k)
    for (long c = 0; c < nc; ++c)
      d.power_maps[static_cast<size_t>(k)][static_cast<size_t>(c)] =
          class_index.at(cay->conjugacy_class_of(cay->power(class_reps[static_cast<size_t>(c)], k)));

  for (const auto& row : char_rows) {
    std::vector<CycNumber> vals;
    for (const auto& coeffs : row) {
      std::vector<Rat> raw;
      raw.reserve(coeffs.size());
      for (long x : coeffs) raw.emplace_back(x);
      vals.emplace_back(e, std::move(raw));
    }
    d.irreducibles.push_back(std::move(vals));
  }
  d.cayley = cay;
  d.class_reps = std::move(class_reps);

  ValidationResult r = validate_char_table(std::move(d));
  if (!r.ok()) {
    std::string msg = "catalog: bundled table '" + name + "' failed validation:";
    for (const auto& err : r.errors) msg += "\n  " + err;
    throw std::logic_error(msg);
  }
  return r.table;
}

TablePtr build_s3() {
  auto perms = all_perms(3, false);
  // lex order: 0=id, 1=(12), 2=(01), 3=(012), 4=(021), 5=(02)
  return build_from_cayley("s3", permutation_mult(perms), {0, 1, 3}, {"1a", "2a", "3a"}, 6,
                           {{{1}, {1}, {1}},
                            {{1}, {-1}, {1}},
                            {{2}, {0}, {-1}}});
}

TablePtr build_a4() {
  auto perms = all_perms(4, true);
  auto mult = permutation_mult(perms);
  CayleyTable cay(mult);
  long id = cay.identity();
  long invol = -1, three = -1;
  for (long a = 0; a < cay.size() && (invol < 0 || three < 0); ++a) {
    long ord = cay.element_order(a);
    if (ord == 2 && invol < 0) invol = a;
    if (ord == 3 && three < 0) three = a;
  }
  long three_sq = cay.mul(three, three);
  if (cay.conjugacy_class_of(three_sq) == cay.conjugacy_class_of(three))
    throw std::logic_error("catalog: a4 three-cycle classes did not split");
  // omega = zeta_6^2, omega^2 = zeta_6^4
  std::vector<long> w = {0, 0, 1, 0, 0, 0};
  std::vector<long> w2 = {0, 0, 0, 0, 1, 0};
  std::vector<long> one = {1};
  return build_from_cayley("a4", std::move(mult), {id, invol, three, three_sq},
                           {"1a", "2a", "3a", "3b"}, 6,
                           {{one, one, one, one},
                            {one, one, w, w2},
                            {one, one, w2, w},
                            {{3}, {-1}, {0}, {0}}});
}

TablePtr build_d4() {
  // elements r^a s^b, index a + 4b
  std::vector<std::vector<long>> mult(8, std::vector<long>(8, 0));
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 2; ++b)
      for (long c = 0; c < 4; ++c)
        for (long dd = 0; dd < 2; ++dd) {
          long aa = ((a + (b ? -c : c)) % 4 + 4) % 4;
          long bb = (b + dd) % 2;
          mult[static_cast<size_t>(a + 4 * b)][static_cast<size_t>(c + 4 * dd)] = aa + 4 * bb;
        }
  return build_from_cayley("d4", std::move(mult), {0, 2, 1, 4, 5},
                           {"1a", "2a", "4a", "2b", "2c"}, 4,
                           {{{1}, {1}, {1}, {1}, {1}},
                            {{1}, {1}, {1}, {-1}, {-1}},
                            {{1}, {1}, {-1}, {1}, {-1}},
                            {{1}, {1}, {-1}, {-1}, {1}},
                            {{2}, {-2}, {0}, {0}, {0}}});
}

TablePtr build_q8() {
  // index = axis + 4*sign, axes 1,i,j,k
  static const long axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const long sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<long>> mult(8, std::vector<long>(8, 0));
  for (long ax = 0; ax < 4; ++ax)
    for (long sx = 0; sx < 2; ++sx)
      for (long ay = 0; ay < 4; ++ay)
        for (long sy = 0; sy < 2; ++sy) {
          long az = axis_mul[ax][ay];
          long sz = (sx + sy + sign_mul[ax][ay]) % 2;
          mult[static_cast<size_t>(ax + 4 * sx)][static_cast<size_t>(ay + 4 * sy)] =
              az + 4 * sz;
        }
  return build_from_cayley("q8", std::move(mult), {0, 4, 1, 2, 3},
                           {"1a", "2a", "4a", "4b", "4c"}, 4,
                           {{{1}, {1}, {1}, {1}, {1}},
                            {{1}, {1}, {1}, {-1}, {-1}},
                            {{1}, {1}, {-1}, {1}, {-1}},
                            {{1}, {1}, {-1}, {-1}, {1}},
                            {{2}, {-2}, {0}, {0}, {0}}});
}

std::map<std::string, TablePtr>& cache() {
  static std::map<std::string, TablePtr> c;
  return c;
}
std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

TablePtr build(const std::string& name) {
  if (name == "s3") return build_s3();
  if (name == "d4") return build_d4();
  if (name == "q8") return build_q8();
  if (name == "a4") return build_a4();
  if (name == "c2x2") return abelian_char_table({2, 2}, "c2x2");
  if (name == "c2x4") return abelian_char_table({2, 4}, "c2x4");
  for (long n = 1; n <= 12; ++n)
    if (name == "c" + std::to_string(n)) return abelian_char_table({n}, name);
  throw std::invalid_argument("catalog: unknown table '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (long n = 1; n <= 12; ++n) names.push_back("c" + std::to_string(n));
  names.insert(names.end(), {"c2x2", "c2x4", "s3", "d4", "q8", "a4"});
  return names;
}

bool catalog_has(const std::string& name) {
  auto names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

TablePtr catalog_table(const std::string& name) {
  std::lock_guard<std::mutex> lk(cache_mutex());
  auto it = cache().find(name);
  if (it != cache().end()) return it->second;
  TablePtr t = build(name);
  cache().emplace(name, t);
  return t;
}

}  // namespace sympow
