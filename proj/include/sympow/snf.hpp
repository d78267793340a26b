// Smith normal form and the integer linear algebra built on it.
#pragma once

#include <optional>
#include <vector>

#include "sympow/int_matrix.hpp"

namespace sympow {

struct SmithResult {
  IntMatrix u, d, v;        // u * m * v = d
  IntMatrix u_inv, v_inv;   // exact inverses of the unimodular witnesses
  long rank = 0;            // number of nonzero diagonal entries
  std::vector<Int> diagonal() const;
};

// U*M*V = D with U, V unimodular and d_1 | d_2 | ... (nonnegative diagonal).
// Pivot choice: smallest nonzero absolute value, ties broken row-major.
SmithResult smith_normal_form(const IntMatrix& m);

// Canonical basis of the column lattice: lower column echelon with positive
// pivots and entries to the right of each pivot reduced into [0, pivot).
// Zero columns are dropped, so the result has full column rank.
IntMatrix column_hnf(const IntMatrix& m);

// One integral solution w of B*w = x, or nullopt when none exists.
std::optional<std::vector<Int>> solve_columns(const IntMatrix& b, const std::vector<Int>& x);

// Columns spanning the integer kernel {x : M*x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

// Inverse of a unimodular matrix; throws if the matrix is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace sympow
