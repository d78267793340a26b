#include "sympow/local_cover.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sympow {

namespace {

// Polynomials over F_q, coefficient encodings lowest-degree first.
using PolyGF = std::vector<long>;

void ptrim(PolyGF& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyGF pmul(const GF& f, const PolyGF& a, const PolyGF& b) {
  if (a.empty() || b.empty()) return {};
  PolyGF r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  ptrim(r);
  return r;
}

PolyGF psub(const GF& f, const PolyGF& a, const PolyGF& b) {
  PolyGF r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  ptrim(r);
  return r;
}

// Exact division (Bareiss guarantees it); throws if the division leaves a
// remainder, which would indicate a broken matrix.
PolyGF pdiv_exact(const GF& f, PolyGF num, const PolyGF& den) {
  if (den.empty()) throw std::logic_error("pdiv_exact: division by zero polynomial");
  ptrim(num);
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("pdiv_exact: inexact division");
  PolyGF q(num.size() - den.size() + 1, 0);
  const long lead_inv = f.inv(den.back());
  for (size_t qi = q.size(); qi-- > 0;) {
    size_t top = qi + den.size() - 1;
    if (top >= num.size() || num[top] == 0) continue;
    long c = f.mul(num[top], lead_inv);
    q[qi] = c;
    for (size_t i = 0; i < den.size(); ++i)
      num[qi + i] = f.sub(num[qi + i], f.mul(c, den[i]));
  }
  ptrim(num);
  if (!num.empty()) throw std::logic_error("pdiv_exact: inexact division");
  return q;
}

// Determinant of a square polynomial matrix by fraction-free elimination;
// returns the zero polynomial when singular.
PolyGF poly_determinant(const GF& f, std::vector<std::vector<PolyGF>> m) {
  const size_t n = m.size();
  if (n == 0) return {1};
  PolyGF prev = {1};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      size_t p = k + 1;
      while (p < n && m[p][k].empty()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);  // sign change only; irrelevant for valuation,
                              // and tracked anyway below
      for (size_t j = 0; j < n; ++j) m[p][j] = psub(f, {}, m[p][j]);
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        PolyGF num = psub(f, pmul(f, m[i][j], m[k][k]), pmul(f, m[i][k], m[k][j]));
        m[i][j] = pdiv_exact(f, std::move(num), prev);
      }
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

// rank over F_q by row elimination
long gf_rank(const GF& f, std::vector<std::vector<long>>& a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  long rank = 0;
  size_t col = 0;
  for (size_t r = 0; r < rows && col < cols; ++col) {
    size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    long inv = f.inv(a[r][col]);
    for (size_t j = col; j < cols; ++j) a[r][j] = f.mul(a[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      long c = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(c, a[r][j]));
    }
    ++r;
    ++rank;
  }
  return rank;
}

long mod_e(long a, long e) { return ((a % e) + e) % e; }

// Resolvent matrix of the cover at exponent j: rows (rho, c), columns
// (alpha, beta); the basis of the source is t^alpha (x) t^{j+beta}, the basis
// of the target is t^{j+rho} (x) [gamma^c], all over Y = k[[s]].
std::vector<std::vector<PolyGF>> resolvent_matrix(const Cover& cov, long j) {
  const long e = cov.e;
  const GF& f = cov.field;
  std::vector<std::vector<PolyGF>> m(static_cast<size_t>(e * e),
                                     std::vector<PolyGF>(static_cast<size_t>(e * e)));
  for (long alpha = 0; alpha < e; ++alpha)
    for (long beta = 0; beta < e; ++beta) {
      long col = alpha * e + beta;
      long rho = mod_e(alpha + beta, e);
      long w = (alpha + beta - rho) / e;  // 0 or 1
      for (long c = 0; c < e; ++c) {
        // gamma^c(t^{j+beta}) = zeta^{c(j+beta)} t^{j+beta}; lands on
        // [gamma^{-c}], i.e. row index (rho, e-c mod e).
        long coeff = f.pow(cov.zeta, c * (j + beta) % e);
        long row = rho * e + mod_e(-c, e);
        PolyGF entry(static_cast<size_t>(w) + 1, 0);
        entry[static_cast<size_t>(w)] = coeff;
        m[static_cast<size_t>(row)][static_cast<size_t>(col)] = std::move(entry);
      }
    }
  return m;
}

}  // namespace

Cover setup_cover(long q, long e) {
  if (!is_prime_power(q)) throw std::invalid_argument("setup_cover: q must be a prime power");
  if (e < 1) throw std::invalid_argument("setup_cover: e must be >= 1");
  if ((q - 1) % e != 0)
    throw std::invalid_argument("setup_cover: e does not divide q-1 (no tame cyclic cover)");
  GF f(q);
  long zeta = f.element_of_order(e);
  return Cover{q, e, zeta, std::move(f)};
}

TorsionClass::TorsionClass(long e, std::vector<Int> mult) : e_(e), m_(std::move(mult)) {
  if (e < 1) throw std::invalid_argument("TorsionClass: e must be >= 1");
  if (static_cast<long>(m_.size()) != e)
    throw std::invalid_argument("TorsionClass: multiplicity vector length mismatch");
}

TorsionClass TorsionClass::zero(long e) {
  return TorsionClass(e, std::vector<Int>(static_cast<size_t>(e), Int(0)));
}

TorsionClass TorsionClass::regular(long e) {
  return TorsionClass(e, std::vector<Int>(static_cast<size_t>(e), Int(1)));
}

TorsionClass TorsionClass::operator+(const TorsionClass& o) const {
  if (e_ != o.e_) throw std::invalid_argument("TorsionClass: group order mismatch");
  std::vector<Int> r(m_.size());
  for (size_t i = 0; i < m_.size(); ++i) r[i] = m_[i] + o.m_[i];
  return TorsionClass(e_, std::move(r));
}

TorsionClass TorsionClass::operator-(const TorsionClass& o) const {
  if (e_ != o.e_) throw std::invalid_argument("TorsionClass: group order mismatch");
  std::vector<Int> r(m_.size());
  for (size_t i = 0; i < m_.size(); ++i) r[i] = m_[i] - o.m_[i];
  return TorsionClass(e_, std::move(r));
}

bool TorsionClass::is_multiple_of_regular() const {
  for (const Int& v : m_)
    if (v != m_[0]) return false;
  return true;
}

std::string TorsionClass::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < m_.size(); ++i) {
    if (i) os << ",";
    os << m_[i].get_str();
  }
  return os.str();
}

TorsionClass reduce_mod_ind(const TorsionClass& c) {
  Int mn = c.multiplicities()[0];
  for (const Int& v : c.multiplicities()) mn = std::min(mn, v);
  std::vector<Int> r(c.multiplicities().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = c.multiplicities()[i] - mn;
  return TorsionClass(c.e(), std::move(r));
}

TorsionClass fractional_quotient_class(const Cover& cov, long a, long b) {
  if (a > b) throw std::invalid_argument("fractional_quotient_class: requires a <= b");
  std::vector<Int> mult(static_cast<size_t>(cov.e), Int(0));
  for (long m = a; m < b; ++m) mult[static_cast<size_t>(mod_e(m, cov.e))] += 1;
  return TorsionClass(cov.e, std::move(mult));
}

ResolventResult resolvent_class(const Cover& cov, long j) {
  auto m = resolvent_matrix(cov, j);
  PolyGF det = poly_determinant(cov.field, m);
  if (det.empty())
    throw std::domain_error("resolvent_class: resolvent map is not injective (zero determinant)");
  long val = 0;
  while (det[static_cast<size_t>(val)] == 0) ++val;
  ResolventResult r = resolvent_class_at(cov, j, val);
  r.det_valuation = val;
  return r;
}

ResolventResult resolvent_class_at(const Cover& cov, long j, long truncation) {
  const long e = cov.e;
  const GF& f = cov.field;
  const long nt = truncation;

  auto m = resolvent_matrix(cov, j);
  PolyGF det = poly_determinant(f, m);
  if (det.empty()) throw std::domain_error("resolvent_class_at: zero determinant");
  long val = 0;
  while (det[static_cast<size_t>(val)] == 0) ++val;
  if (nt < val)
    throw std::invalid_argument("resolvent_class_at: truncation below the determinant valuation");

  std::vector<Int> mult(static_cast<size_t>(e), Int(0));
  if (nt > 0) {
    // Full map modulo s^nt as a matrix over F_q: row/column index layout is
    // (basis index) * nt + s-degree.
    const long dim = e * e * nt;
    std::vector<std::vector<long>> big(static_cast<size_t>(dim),
                                       std::vector<long>(static_cast<size_t>(dim), 0));
    for (long row = 0; row < e * e; ++row)
      for (long col = 0; col < e * e; ++col) {
        const PolyGF& h = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (size_t w = 0; w < h.size(); ++w) {
          if (h[w] == 0) continue;
          for (long v = 0; v + static_cast<long>(w) < nt; ++v)
            big[static_cast<size_t>(row * nt + v + static_cast<long>(w))]
               [static_cast<size_t>(col * nt + v)] = h[w];
        }
      }
    // Character-isotypic projections of the image: the generator permutes
    // target basis rows (rho, c) -> (rho, c+1); the chi^i-eigenvector with
    // label (rho, w) has coefficient zeta^{-ic} on (rho, c, w). Projection
    // coefficients of a column are (1/e) sum_c zeta^{ic} x[rho, c, w].
    const long inv_e = f.inv(e % f.p());  // e is a unit: e | q-1
    for (long i = 0; i < e; ++i) {
      std::vector<std::vector<long>> proj(
          static_cast<size_t>(e * nt), std::vector<long>(static_cast<size_t>(dim), 0));
      for (long col = 0; col < dim; ++col)
        for (long rho = 0; rho < e; ++rho)
          for (long w = 0; w < nt; ++w) {
            long acc = 0;
            for (long c = 0; c < e; ++c) {
              long entry = big[static_cast<size_t>((rho * e + c) * nt + w)]
                              [static_cast<size_t>(col)];
              if (entry != 0)
                acc = f.add(acc, f.mul(f.pow(cov.zeta, (i * c) % e), entry));
            }
            proj[static_cast<size_t>(rho * nt + w)][static_cast<size_t>(col)] =
                f.mul(inv_e, acc);
          }
      long rank = gf_rank(f, proj);
      mult[static_cast<size_t>(i)] = Int(e * nt - rank);
    }
  }

  ResolventResult out{TorsionClass(e, std::move(mult)), val, nt};
  Int total(0);
  for (const Int& v : out.cls.multiplicities()) total += v;
  if (total != val)
    throw std::logic_error("resolvent_class: cokernel dimension differs from det valuation");
  return out;
}

CoverCheck check_chase_identity(const Cover& cov, long j) {
  ResolventResult r = resolvent_class(cov, j);
  std::vector<Int> expect(static_cast<size_t>(cov.e), Int(0));
  for (long i = 1; i < cov.e; ++i) expect[static_cast<size_t>(mod_e(j + i, cov.e))] += i;
  TorsionClass rhs(cov.e, std::move(expect));
  CoverCheck out{"resolvent class = sum_{i=1..e-1} i * chi^{j+i}", r.cls, rhs, r.det_valuation,
                 r.cls == rhs};
  return out;
}

CoverCheck check_different_identity(const Cover& cov, long j) {
  if (j > 0) throw std::invalid_argument("check_different_identity: requires j <= 0");
  ResolventResult r = resolvent_class(cov, j);
  // The i-th term is P^j tensored with the torsion quotient D^{-i}/O_X,
  // i.e. P^{j-i(e-1)} / P^j.
  TorsionClass rhs = TorsionClass::zero(cov.e);
  for (long i = 1; i < cov.e; ++i)
    rhs = rhs + fractional_quotient_class(cov, j - i * (cov.e - 1), j);
  bool pass = (rhs - r.cls).is_multiple_of_regular();
  CoverCheck out{"resolvent class = sum_{i=1..e-1} [P^j (x) (D^{-i}/O)] mod Z*r_G", r.cls, rhs,
                 r.det_valuation, pass};
  return out;
}

}  // namespace sympow
