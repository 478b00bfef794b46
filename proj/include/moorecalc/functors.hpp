#pragma once

#include <vector>

#include "moorecalc/fga.hpp"

namespace moorecalc {

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup ext(const AbelianGroup& a, const AbelianGroup& b);

/// Ext(A, B) computed from the canonical presentation 0 -> Z^k -> Z^n -> A -> 0
/// as the cokernel of Hom(Z^n, B) -> Hom(Z^k, B).
///
/// A cocycle assigns to each relation of A (one per invariant factor) a value
/// in B; `class_of` and `cocycle` convert between cocycles and coordinates in
/// the canonical form of Ext(A, B).
class ExtGroup {
 public:
  ExtGroup(AbelianGroup a, AbelianGroup b);

  const AbelianGroup& first() const { return a_; }
  const AbelianGroup& second() const { return b_; }
  const AbelianGroup& group() const { return group_; }

  GroupElement class_of(const std::vector<GroupElement>& cocycle) const;
  std::vector<GroupElement> cocycle(const GroupElement& cls) const;

  // Block-coordinate forms of the two conversions above.
  const IntMatrix& to_canonical() const { return to_canonical_; }
  const IntMatrix& from_canonical() const { return from_canonical_; }

 private:
  AbelianGroup a_;
  AbelianGroup b_;
  AbelianGroup group_;
  IntMatrix to_canonical_;
  IntMatrix from_canonical_;
};

// 0 -> B --f--> E --g--> A -> 0
struct Extension {
  AbelianGroup E;
  GroupHom f;
  GroupHom g;
};

struct ExtClass {
  AbelianGroup ambient;
  GroupElement class_coords;
  Extension realization;
};

// Throws std::invalid_argument if coords do not belong to Ext(A, B).
ExtClass ext_realize(const AbelianGroup& a, const AbelianGroup& b, const GroupElement& coords);

// Coordinates of the class of an extension of A by B. Throws AlgebraError if
// the witness is not a short exact sequence.
GroupElement ext_classify(const AbelianGroup& a, const AbelianGroup& b, const Extension& e);

// Exactness of a witness, decided on subgroups (works for infinite groups).
bool is_short_exact(const Extension& e);

// Induced maps u^*: Ext(A, B) -> Ext(A', B) for u: A' -> A, and
// v_*: Ext(A, B) -> Ext(A, B') for v: B -> B'.
GroupHom ext_pullback(const GroupHom& u, const AbelianGroup& b);
GroupHom ext_pushforward(const AbelianGroup& a, const GroupHom& v);

// The map A_2 -> B/2 attached to one extension: lift x through g, double,
// pull back through f, reduce mod 2.
GroupHom lambda_of_extension(const AbelianGroup& a, const AbelianGroup& b, const Extension& e);

// lambda: Ext(A, B) -> Hom(A_2, B/2), the target taken in canonical form.
GroupHom lambda_map(const AbelianGroup& a, const AbelianGroup& b);

// True iff lambda_map(A, B) is an isomorphism. Holds whenever A or B is
// killed by 2.
bool lambda_iso_check(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace moorecalc
