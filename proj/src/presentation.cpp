#include "moorecalc/presentation.hpp"

namespace moorecalc::presentation {

GroupElement Canonical::project(const IntVector& v) const {
  return GroupElement(group, to_canonical * v);
}

Canonical canonicalize(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithForm s = smith_normal_form(relations);
  std::vector<std::size_t> free_idx;
  std::vector<std::size_t> torsion_idx;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = s.diagonal(i);
    if (d == 0) {
      free_idx.push_back(i);
    } else if (d != 1) {
      torsion_idx.push_back(i);
      torsion.push_back(d);
    }
  }
  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), torsion_idx.begin(), torsion_idx.end());

  Canonical c{AbelianGroup(free_idx.size(), std::move(torsion)), s.U.select_rows(order),
              s.U_inv.select_cols(order)};
  for (std::size_t k = 0; k < torsion_idx.size(); ++k) {
    const std::size_t row = free_idx.size() + k;
    const Integer d = c.group.generator_order(row);
    for (std::size_t j = 0; j < c.to_canonical.cols(); ++j)
      c.to_canonical(row, j) = mod_floor(c.to_canonical(row, j), d);
  }
  return c;
}

Subquotient subquotient(const IntMatrix& sub_gens, const IntMatrix& relations) {
  // (S + L) / L is Z^t modulo {c : S c in L}.
  const std::size_t t = sub_gens.cols();
  IntMatrix joint = sub_gens.hstack(-relations);
  IntMatrix ker = integer_kernel(joint);
  IntMatrix rel = ker.block(0, 0, t, ker.cols());
  Canonical c = canonicalize(rel);
  return {c.group, sub_gens * c.from_canonical};
}

Subquotient kernel(const IntMatrix& map, const IntMatrix& source_rel, const IntMatrix& target_rel) {
  const std::size_t n = map.cols();
  IntMatrix ker = integer_kernel(map.hstack(-target_rel));
  IntMatrix gens = ker.block(0, 0, n, ker.cols());
  return subquotient(gens, source_rel);
}

Canonical cokernel(const IntMatrix& map, const IntMatrix& target_rel) {
  return canonicalize(map.hstack(target_rel));
}

std::optional<IntVector> solve(const IntMatrix& map, const IntMatrix& target_rel, const IntVector& y) {
  auto sol = solve_in_lattice(map.hstack(target_rel), y);
  if (!sol) return std::nullopt;
  sol->resize(map.cols());
  return sol;
}

IntMatrix relations_of_sum(const std::vector<AbelianGroup>& groups) {
  IntMatrix rel;
  for (const auto& g : groups) rel = rel.direct_sum(g.relation_matrix());
  return rel;
}

}  // namespace moorecalc::presentation
