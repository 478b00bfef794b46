#pragma once

// Lattice-level machinery shared by the module implementations. A presented
// group is Z^n modulo the column span of a relation matrix (n rows); maps
// between presented groups are plain integer matrices on the generators.

#include "moorecalc/fga.hpp"

namespace moorecalc::presentation {

// Canonical form of Z^n / span(relations) with coordinate changes both ways.
struct Canonical {
  AbelianGroup group;
  IntMatrix to_canonical;    // group generators x n
  IntMatrix from_canonical;  // n x group generators

  GroupElement project(const IntVector& v) const;
};

Canonical canonicalize(const IntMatrix& relations);

// (span(sub_gens) + span(relations)) / span(relations); `inclusion` maps the
// canonical generators of the result back into Z^n.
struct Subquotient {
  AbelianGroup group;
  IntMatrix inclusion;
};

Subquotient subquotient(const IntMatrix& sub_gens, const IntMatrix& relations);

// Kernel of x -> map x from Z^n / span(source_rel) to Z^m / span(target_rel).
// `map` must carry source relations into the target lattice.
Subquotient kernel(const IntMatrix& map, const IntMatrix& source_rel, const IntMatrix& target_rel);

// Cokernel of the same kind of map; to_canonical projects Z^m onto it.
Canonical cokernel(const IntMatrix& map, const IntMatrix& target_rel);

// Some x with map x == y modulo span(target_rel).
std::optional<IntVector> solve(const IntMatrix& map, const IntMatrix& target_rel, const IntVector& y);

// Block-diagonal relation matrix for a direct sum of canonical groups.
IntMatrix relations_of_sum(const std::vector<AbelianGroup>& groups);

}  // namespace moorecalc::presentation
