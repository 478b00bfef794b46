#pragma once

#include <array>

#include "moorecalc/exact_couples.hpp"
#include "moorecalc/fga.hpp"

namespace moorecalc {

// M(A, n) for symbolic n >= 3; everything computed here is stable, so only
// the homology group matters.
struct MooreSpace {
  AbelianGroup homology;
};

inline constexpr int kMaxStem = 7;

// pi_q^S of the sphere for 0 <= q <= 7; the trivial group for q == -1.
AbelianGroup sphere_stem(int q);

// pi_q^S(M(A, n)) in stem degree q = i - n.
struct StemTable {
  std::array<AbelianGroup, kMaxStem + 1> entries;

  const AbelianGroup& operator[](int q) const { return entries.at(static_cast<std::size_t>(q)); }
  friend bool operator==(const StemTable&, const StemTable&) = default;
};

/// The couple A --alpha--> A' --beta--> A attached to M(A, n).
///
/// A' is built as the extension 0 -> A/2 -> A' -> A_2 -> 0 whose lambda
/// invariant is the natural map A_2 -> A -> A/2; alpha is A -> A/2 -> A' and
/// beta is A' -> A_2 -> A.
ExactCouple canonical_couple(const AbelianGroup& a);

// [M(A, n), M(B, n)] as the morphism group of the canonical couples.
MorphismGroup homotopy_classes(const AbelianGroup& a, const AbelianGroup& b);

struct Normalization {
  ExactCouple canonical;
  CoupleMorphism iso;  // D -> canonical, f1 = identity
};

// Throws AlgebraError when D is not a valid couple.
Normalization normalize(const ExactCouple& d);

// Cokernel of C -> X + Y, c -> (f(c), -g(c)).
AbelianGroup pushout(const GroupHom& f, const GroupHom& g);

// Throws std::out_of_range unless 0 <= q <= 7.
AbelianGroup stable_stem(const AbelianGroup& a, int q);
StemTable stem_table(const AbelianGroup& a);

// |pi_q^S(M(A))| == |A (x) pi_q^S| * |Tor(A, pi_{q-1}^S)|. Throws AlgebraError
// for infinite A.
bool ahss_order_check(const AbelianGroup& a, int q);

// |[M(A), M(B)]| == |Ext(A, B/2)| * |Hom(A, B)|. Throws AlgebraError for
// infinite input.
bool homotopy_ses_order_check(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace moorecalc
