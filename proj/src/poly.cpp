#include "sympow/poly.hpp"

#include <map>
#include <mutex>

namespace sympow {

namespace {

IntPoly x_power_minus_one(long e) {
  std::vector<Int> c(static_cast<size_t>(e) + 1, Int(0));
  c[0] = -1;
  c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly cyclotomic_polynomial(long e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be >= 1");

  static std::map<long, IntPoly> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }

  // Phi_1 .. Phi_e for divisors of e, in increasing order.
  std::map<long, IntPoly> local;
  for (long d = 1; d <= e; ++d) {
    if (e % d != 0) continue;
    IntPoly num = x_power_minus_one(d);
    for (auto& [dd, phi] : local) {
      if (d % dd != 0) continue;
      auto qr = num.divmod_monic(phi);
      if (!qr.remainder.is_zero())
        throw std::logic_error("cyclotomic_polynomial: non-exact division");
      num = std::move(qr.quotient);
    }
    local.emplace(d, std::move(num));
  }

  IntPoly result = local.at(e);
  {
    std::lock_guard<std::mutex> lk(mtx);
    for (auto& [d, phi] : local) cache.emplace(d, std::move(phi));
  }
  return result;
}

}  // namespace sympow
