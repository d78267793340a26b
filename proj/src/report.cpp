#include "sympow/report.hpp"

#include <algorithm>
#include <fstream>

namespace sympow {

std::string tool_version() { return "0.1.0"; }

long Report::passed() const {
  long n = 0;
  for (const auto& r : records) n += r.pass;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["tool"] = {{"name", tool_name}, {"version", tool_version}};
  j["config"] = config;
  std::vector<const CheckRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord* a, const CheckRecord* b) { return a->id < b->id; });
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord* r : sorted) {
    checks.push_back({{"id", r->id},
                      {"identity", r->identity},
                      {"inputs", r->inputs},
                      {"expected", r->expected},
                      {"actual", r->actual},
                      {"pass", r->pass},
                      {"millis", r->millis}});
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", total()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

void Report::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("Report::write: cannot write " + path);
  out << to_json().dump(2) << "\n";
}

}  // namespace sympow
