#include "sympow/snf.hpp"

#include <stdexcept>

namespace sympow {

namespace {

// Row/column operations applied to D and mirrored on the witnesses so that
// u*m*v = d and u*u_inv = v*v_inv = id stay true throughout.
struct Worker {
  IntMatrix d, u, v, u_inv, v_inv;

  explicit Worker(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        u_inv(IntMatrix::identity(m.rows())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(long a, long b) {
    if (a == b) return;
    for (long j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (long j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    for (long i = 0; i < u_inv.rows(); ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
  }
  void swap_cols(long a, long b) {
    if (a == b) return;
    for (long i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (long i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    for (long j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
  }
  // row a += q * row b
  void add_row(long a, long b, const Int& q) {
    if (q == 0) return;
    for (long j = 0; j < d.cols(); ++j) d.at(a, j) += q * d.at(b, j);
    for (long j = 0; j < u.cols(); ++j) u.at(a, j) += q * u.at(b, j);
    for (long i = 0; i < u_inv.rows(); ++i) u_inv.at(i, b) -= q * u_inv.at(i, a);
  }
  // col a += q * col b
  void add_col(long a, long b, const Int& q) {
    if (q == 0) return;
    for (long i = 0; i < d.rows(); ++i) d.at(i, a) += q * d.at(i, b);
    for (long i = 0; i < v.rows(); ++i) v.at(i, a) += q * v.at(i, b);
    for (long j = 0; j < v_inv.cols(); ++j) v_inv.at(b, j) -= q * v_inv.at(a, j);
  }
  void negate_row(long a) {
    for (long j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (long j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    for (long i = 0; i < u_inv.rows(); ++i) u_inv.at(i, a) = -u_inv.at(i, a);
  }
};

// Smallest nonzero |entry| of d in the trailing submatrix, row-major ties.
bool find_pivot(const IntMatrix& d, long t, long& pi, long& pj) {
  bool found = false;
  Int best;
  for (long i = t; i < d.rows(); ++i)
    for (long j = t; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  long n = std::min(d.rows(), d.cols());
  for (long i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  Worker w(m);
  const long n = std::min(m.rows(), m.cols());
  long t = 0;
  for (; t < n; ++t) {
    long pi, pj;
    if (!find_pivot(w.d, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear the pivot row and column; remainders create smaller entries,
      // so re-pivot on the new minimum until both are clean.
      bool dirty = false;
      for (long i = t + 1; i < w.d.rows(); ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);  // truncated division
        w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) dirty = true;
      }
      for (long j = t + 1; j < w.d.cols(); ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        if (!find_pivot(w.d, t, pi, pj)) throw std::logic_error("snf: lost pivot");
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        continue;
      }
      // Pivot must divide every remaining entry for the chain property.
      long bi = -1;
      for (long i = t + 1; i < w.d.rows() && bi < 0; ++i)
        for (long j = t + 1; j < w.d.cols(); ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      w.add_row(t, bi, Int(1));
      if (!find_pivot(w.d, t, pi, pj)) throw std::logic_error("snf: lost pivot");
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }

  SmithResult r;
  r.u = std::move(w.u);
  r.d = std::move(w.d);
  r.v = std::move(w.v);
  r.u_inv = std::move(w.u_inv);
  r.v_inv = std::move(w.v_inv);
  r.rank = t;
  return r;
}

IntMatrix column_hnf(const IntMatrix& m) {
  // Column echelon via unimodular column operations.
  IntMatrix a = m;
  const long rows = a.rows();
  long lead = 0;  // next column to place a pivot in
  for (long i = 0; i < rows && lead < a.cols(); ++i) {
    // Reduce row i across columns lead..end by gcd column operations.
    for (;;) {
      long p = -1;
      Int best;
      for (long j = lead; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        Int v = abs(a.at(i, j));
        if (p < 0 || v < best) {
          p = j;
          best = v;
        }
      }
      if (p < 0) break;  // row i is zero from lead on; no pivot here
      // Move pivot column to position lead.
      if (p != lead)
        for (long r2 = 0; r2 < rows; ++r2) std::swap(a.at(r2, p), a.at(r2, lead));
      bool clean = true;
      for (long j = lead + 1; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        Int q = a.at(i, j) / a.at(i, lead);
        for (long r2 = 0; r2 < rows; ++r2) a.at(r2, j) -= q * a.at(r2, lead);
        if (a.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(i, lead) == 0) continue;
    if (a.at(i, lead) < 0)
      for (long r2 = 0; r2 < rows; ++r2) a.at(r2, lead) = -a.at(r2, lead);
    // Reduce earlier columns at this pivot row into [0, pivot).
    for (long j = 0; j < lead; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(i, lead).get_mpz_t());
      if (q != 0)
        for (long r2 = 0; r2 < rows; ++r2) a.at(r2, j) -= q * a.at(r2, lead);
    }
    ++lead;
  }
  // First `lead` columns hold the echelon basis; the rest are zero.
  IntMatrix out(rows, lead);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < lead; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

std::optional<std::vector<Int>> solve_columns(const IntMatrix& b, const std::vector<Int>& x) {
  if (static_cast<long>(x.size()) != b.rows())
    throw std::invalid_argument("solve_columns: dimension mismatch");
  SmithResult s = smith_normal_form(b);
  std::vector<Int> ux = s.u.apply(x);
  std::vector<Int> z(static_cast<size_t>(b.cols()), Int(0));
  const long n = std::min(b.rows(), b.cols());
  for (long i = 0; i < n; ++i) {
    const Int& di = s.d.at(i, i);
    if (di == 0) {
      if (ux[static_cast<size_t>(i)] != 0) return std::nullopt;
      continue;
    }
    if (ux[static_cast<size_t>(i)] % di != 0) return std::nullopt;
    z[static_cast<size_t>(i)] = ux[static_cast<size_t>(i)] / di;
  }
  for (long i = n; i < b.rows(); ++i)
    if (ux[static_cast<size_t>(i)] != 0) return std::nullopt;
  return s.v.apply(z);
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  std::vector<std::vector<Int>> cols;
  for (long j = 0; j < m.cols(); ++j) {
    bool in_kernel = j >= std::min(m.rows(), m.cols()) || s.d.at(j, j) == 0;
    if (in_kernel) cols.push_back(s.v.column(j));
  }
  return IntMatrix::from_columns(m.cols(), cols);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  if (!s.d.is_identity()) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
  // u*m*v = id  =>  m^{-1} = v*u
  return s.v * s.u;
}

}  // namespace sympow
