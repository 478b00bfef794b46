#pragma once

#include <optional>

#include "moorecalc/matrix.hpp"

namespace moorecalc {

// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... with
// zeros last and every entry non-negative. The inverses are tracked alongside
// so callers can move between the original and diagonal coordinates.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;

  std::size_t rank() const;
  // d_i for i < min(rows, cols); further coordinates count as 0.
  Integer diagonal(std::size_t i) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Columns span the integer kernel {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Some c with gens * c == v, if v lies in the lattice spanned by the columns.
std::optional<IntVector> solve_in_lattice(const IntMatrix& gens, const IntVector& v);

}  // namespace moorecalc
