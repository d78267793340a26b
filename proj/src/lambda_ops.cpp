#include "sympow/lambda_ops.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sympow/abgroup.hpp"
#include "sympow/snf.hpp"

namespace sympow {

namespace {

VirtualCharacter decompose_or_throw(const ClassFunction& f, const char* who) {
  DecomposeResult r = decompose(f);
  if (!r.ok()) {
    std::ostringstream os;
    os << who << ": non-integral decomposition at coordinates";
    for (const auto& [i, v] : r.non_integral) os << " " << i << "=" << v.str();
    throw std::domain_error(os.str());
  }
  return *r.character;
}

// sigma^0..sigma^k as class functions, over rationals.
std::vector<ClassFunction> sigma_tower(long k, const VirtualCharacter& x) {
  const TablePtr& t = x.table();
  const long e = t->exponent();
  ClassFunction xcf = x.to_class_function();
  std::vector<ClassFunction> psis;  // psi^1..psi^k of x as class functions
  for (long i = 1; i <= k; ++i) psis.push_back(xcf.power_pullback(i));
  std::vector<ClassFunction> sig;
  sig.push_back(ClassFunction(
      t, std::vector<CycNumber>(static_cast<size_t>(t->num_classes()), CycNumber::one(e))));
  for (long m = 1; m <= k; ++m) {
    ClassFunction acc(
        t, std::vector<CycNumber>(static_cast<size_t>(t->num_classes()), CycNumber::zero(e)));
    for (long i = 1; i <= m; ++i)
      acc = acc + psis[static_cast<size_t>(i - 1)] * sig[static_cast<size_t>(m - i)];
    sig.push_back(acc.scaled(Rat(1, m)));
  }
  return sig;
}

std::vector<ClassFunction> lambda_tower(long k, const VirtualCharacter& x) {
  const TablePtr& t = x.table();
  const long e = t->exponent();
  ClassFunction xcf = x.to_class_function();
  std::vector<ClassFunction> psis;
  for (long i = 1; i <= k; ++i) psis.push_back(xcf.power_pullback(i));
  std::vector<ClassFunction> lam;
  lam.push_back(ClassFunction(
      t, std::vector<CycNumber>(static_cast<size_t>(t->num_classes()), CycNumber::one(e))));
  for (long m = 1; m <= k; ++m) {
    ClassFunction acc(
        t, std::vector<CycNumber>(static_cast<size_t>(t->num_classes()), CycNumber::zero(e)));
    for (long i = 1; i <= m; ++i) {
      ClassFunction term = psis[static_cast<size_t>(i - 1)] * lam[static_cast<size_t>(m - i)];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    lam.push_back(acc.scaled(Rat(1, m)));
  }
  return lam;
}

}  // namespace

VirtualCharacter adams(long k, const VirtualCharacter& x) {
  if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
  return decompose_or_throw(x.to_class_function().power_pullback(k), "adams");
}

IntMatrix adams_matrix(const CharTable& t, long k) {
  // The table object is shared; recover a TablePtr via a non-owning alias to
  // evaluate the irreducibles through the usual path.
  TablePtr alias(&t, [](const CharTable*) {});
  IntMatrix m(t.num_classes(), t.num_classes());
  for (long j = 0; j < t.num_classes(); ++j) {
    VirtualCharacter img = adams(k, irreducible(alias, j));
    m.set_column(j, img.coords());
  }
  return m;
}

OperationMatrix adams_operation(TablePtr t, long k) {
  IntMatrix m = adams_matrix(*t, k);
  return OperationMatrix{std::move(t), k, std::move(m)};
}

OperationMatrix adams_adjoint_operation(TablePtr t, long k) {
  IntMatrix m = adams_adjoint_matrix(*t, k);
  return OperationMatrix{std::move(t), k, std::move(m)};
}

OperationMatrix power_pullback_operation(TablePtr t, long a) {
  IntMatrix m = power_pullback_matrix(*t, a);
  return OperationMatrix{std::move(t), a, std::move(m)};
}

VirtualCharacter symmetric_power(long k, const VirtualCharacter& x) {
  if (k < 0) throw std::invalid_argument("symmetric_power: k must be >= 0");
  auto sig = sigma_tower(k, x);
  return decompose_or_throw(sig[static_cast<size_t>(k)], "symmetric_power");
}

VirtualCharacter exterior_power(long k, const VirtualCharacter& x) {
  if (k < 0) throw std::invalid_argument("exterior_power: k must be >= 0");
  auto lam = lambda_tower(k, x);
  return decompose_or_throw(lam[static_cast<size_t>(k)], "exterior_power");
}

VirtualCharacter adams_adjoint(long k, const VirtualCharacter& x) {
  IntMatrix m = adams_adjoint_matrix(*x.table(), k);
  return VirtualCharacter(x.table(), m.apply(x.coords()));
}

IntMatrix adams_adjoint_matrix(const CharTable& t, long k) {
  return adams_matrix(t, k).transpose();
}

IntMatrix power_pullback_matrix(const CharTable& t, long a) {
  if (!t.is_abelian()) throw std::invalid_argument("power_pullback: table is not abelian");
  if (std::gcd(((a % t.order()) + t.order()) % t.order(), t.order()) != 1)
    throw std::invalid_argument("power_pullback: exponent not coprime to the group order");
  const long r = t.num_classes();
  IntMatrix m(r, r);
  for (long j = 0; j < r; ++j) {
    // chi_j^a by pointwise powers, then locate it among the rows.
    std::vector<CycNumber> target;
    target.reserve(static_cast<size_t>(r));
    for (long c = 0; c < r; ++c) target.push_back(t.value(j, c).pow(a));
    long hit = -1;
    for (long i = 0; i < r && hit < 0; ++i)
      if (t.row(i) == target) hit = i;
    if (hit < 0) throw std::logic_error("power_pullback: chi^a is not an irreducible row");
    m.at(hit, j) = 1;
  }
  return m;
}

VirtualCharacter power_pullback(long a, const VirtualCharacter& x) {
  IntMatrix m = power_pullback_matrix(*x.table(), a);
  return VirtualCharacter(x.table(), m.apply(x.coords()));
}

VirtualCharacter multiply(const VirtualCharacter& x, const VirtualCharacter& y) {
  return decompose_or_throw(x.to_class_function() * y.to_class_function(), "multiply");
}

DifferenceExpansion sigma_difference_expansion(long i, const VirtualCharacter& x,
                                               const VirtualCharacter& y) {
  if (i < 1) throw std::invalid_argument("sigma_difference_expansion: i must be >= 1");
  if (x.table() != y.table())
    throw std::invalid_argument("sigma_difference_expansion: table mismatch");
  const TablePtr& t = x.table();
  const long e = t->exponent();

  VirtualCharacter lhs = symmetric_power(i, x - y);

  auto sigx = sigma_tower(i, x);
  auto sigy = sigma_tower(i, y);
  ClassFunction acc(
      t, std::vector<CycNumber>(static_cast<size_t>(t->num_classes()), CycNumber::zero(e)));
  // Term a + b_1 + ... + b_u = i with a >= 0, b_j >= 1, weight (-1)^u.
  struct Walker {
    long i;
    const std::vector<ClassFunction>& sigx;
    const std::vector<ClassFunction>& sigy;
    ClassFunction& acc;
    void walk(long remaining, long u, const ClassFunction& prod) {
      // close the composition: a = remaining
      ClassFunction term = sigx[static_cast<size_t>(remaining)] * prod;
      acc = (u % 2 == 0) ? acc + term : acc - term;
      for (long b = 1; b <= remaining; ++b)
        walk(remaining - b, u + 1, prod * sigy[static_cast<size_t>(b)]);
    }
  };
  ClassFunction one(
      t, std::vector<CycNumber>(static_cast<size_t>(t->num_classes()), CycNumber::one(e)));
  Walker w{i, sigx, sigy, acc};
  w.walk(i, 0, one);
  VirtualCharacter rhs = decompose_or_throw(acc, "sigma_difference_expansion");
  bool equal = lhs == rhs;
  return DifferenceExpansion{std::move(lhs), std::move(rhs), equal};
}

BottCheck bott_checks(long k, long kp, long order) {
  if (k < 1 || kp < 1) throw std::invalid_argument("bott_checks: k, k' must be >= 1");
  if (order < 1) throw std::invalid_argument("bott_checks: series order must be >= 1");
  BottCheck out;
  out.k = k;
  out.kp = kp;
  out.order = order;

  // Laurent side.
  LaurentPoly theta = LaurentPoly::geometric_sum(k);
  LaurentPoly lhs = theta * LaurentPoly::power_sum(0, kp - 1, k);
  LaurentPoly rhs = LaurentPoly::geometric_sum(k * kp);
  out.telescope_ok = lhs == rhs;
  if (!out.telescope_ok) out.witness = "telescope difference: " + (lhs - rhs).str();

  // Series side: d = 1 + u, truncation order N.
  const long N = order;
  TruncSeries d(N, {Rat(1), Rat(1)});
  TruncSeries theta_s = TruncSeries::constant(N, Rat(0));
  for (long j = 0; j < k; ++j) theta_s = theta_s + d.pow(j);
  TruncSeries inv = series_invert(theta_s);
  out.unit_ok = (inv * theta_s).is_one();

  TruncSeries sum_a = TruncSeries::constant(N, Rat(0));
  for (long i = 0; i < kp; ++i) sum_a = sum_a + d.pow(i * k);
  TruncSeries sum_b = TruncSeries::constant(N, Rat(0));
  for (long i = 1; i < k * kp; ++i) sum_b = sum_b + d.pow(i);
  TruncSeries rhs_s = sum_a - inv * sum_b;
  out.inverse_ok = inv == rhs_s;
  if (!out.inverse_ok && out.witness.empty()) out.witness = "series inverse identity failed";
  if (!out.unit_ok && out.witness.empty()) out.witness = "theta * theta^{-1} != 1";
  return out;
}

AugReport augmentation_power_lattice(TablePtr t, long m) {
  if (m < 1) throw std::invalid_argument("augmentation_power_lattice: m must be >= 1");
  const long r = t->num_classes();
  if (r < 2)
    throw std::invalid_argument("augmentation_power_lattice: trivial group has trivial I");
  const long triv =
      [&] {
        VirtualCharacter tc = trivial_character(t);
        for (long i = 0; i < r; ++i)
          if (tc.coords()[static_cast<size_t>(i)] == 1) return i;
        return 0L;
      }();

  // Basis of I: chi_i - deg(chi_i) * 1 for i != triv; I-coordinates of an
  // augmentation-zero vector are its non-trivial components.
  std::vector<long> nontriv;
  for (long i = 0; i < r; ++i)
    if (i != triv) nontriv.push_back(i);
  auto to_icoords = [&](const std::vector<Int>& full) {
    std::vector<Int> v;
    v.reserve(nontriv.size());
    for (long i : nontriv) v.push_back(full[static_cast<size_t>(i)]);
    return v;
  };
  auto from_icoords = [&](const std::vector<Int>& ic) {
    std::vector<Int> full(static_cast<size_t>(r), Int(0));
    Int head(0);
    for (size_t idx = 0; idx < ic.size(); ++idx) {
      full[static_cast<size_t>(nontriv[idx])] = ic[idx];
      head -= ic[idx] * t->degree(nontriv[idx]);
    }
    full[static_cast<size_t>(triv)] = head;
    return full;
  };

  std::vector<VirtualCharacter> ibasis;
  for (long i : nontriv) {
    std::vector<Int> c(static_cast<size_t>(r), Int(0));
    c[static_cast<size_t>(i)] = 1;
    c[static_cast<size_t>(triv)] = -t->degree(i);
    ibasis.emplace_back(t, std::move(c));
  }

  IntMatrix basis = IntMatrix::identity(r - 1);  // I^1 = I in I-coordinates
  IntMatrix prev = basis;
  for (long step = 2; step <= m; ++step) {
    std::vector<std::vector<Int>> prods;
    for (long col = 0; col < basis.cols(); ++col) {
      VirtualCharacter u(t, from_icoords(basis.column(col)));
      for (const auto& b : ibasis) prods.push_back(to_icoords(multiply(u, b).coords()));
    }
    prev = basis;
    basis = column_hnf(IntMatrix::from_columns(r - 1, prods));
    if (basis.cols() != r - 1)
      throw std::logic_error("augmentation_power_lattice: I^m lost rank");
  }

  AugReport rep;
  rep.lattice = AugLattice{t, m, basis};
  rep.index = abs(basis.determinant());

  // chain check: every basis vector of I^m lies in I^{m-1}
  rep.chain_ok = true;
  if (m >= 2) {
    LatticeSolver prev_solver(prev);
    for (long col = 0; col < basis.cols(); ++col)
      if (!prev_solver.solve(basis.column(col))) rep.chain_ok = false;
  }

  // prime-power diagnostics
  long n = t->order();
  long l = 0;
  for (long p = 2; p <= n; ++p)
    if (n % p == 0) {
      l = p;
      break;
    }
  long nn = n;
  while (l > 0 && nn % l == 0) nn /= l;
  if (l > 0 && nn == 1) {
    rep.prime = l;
    Int idx = rep.index;
    while (idx % l == 0) idx /= l;
    rep.index_is_prime_power = idx == 1;
    LatticeSolver solver(basis);
    for (long a = 0; a <= 256; ++a) {
      bool all_in = true;
      Int la = int_pow(Int(l), static_cast<unsigned long>(a));
      for (long i = 0; i < r - 1 && all_in; ++i) {
        std::vector<Int> v(static_cast<size_t>(r - 1), Int(0));
        v[static_cast<size_t>(i)] = la;
        all_in = solver.solve(v).has_value();
      }
      if (all_in) {
        rep.least_a = a;
        break;
      }
    }
  }
  return rep;
}

}  // namespace sympow
