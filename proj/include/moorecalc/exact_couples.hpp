#pragma once

#include <string>
#include <vector>

#include "moorecalc/fga.hpp"

namespace moorecalc {

/// A triangle A --2--> A --alpha--> B --beta--> A with alpha o beta = 2 on B,
/// exact at every vertex.
///
/// Construction only checks that the maps have the right sources and
/// targets; use validate() for the exactness and alpha o beta = 2 axioms.
struct ExactCouple {
  ExactCouple(AbelianGroup a, AbelianGroup b, GroupHom alpha, GroupHom beta);

  AbelianGroup a;
  AbelianGroup b;
  GroupHom alpha;  // A -> B
  GroupHom beta;   // B -> A

  friend bool operator==(const ExactCouple&, const ExactCouple&) = default;
};

struct CoupleMorphism {
  GroupHom f1;  // A -> A''
  GroupHom f2;  // B -> B''

  friend bool operator==(const CoupleMorphism&, const CoupleMorphism&) = default;
};

enum class CoupleDefect {
  kKernelAlpha,   // ker alpha != 2A
  kKernelBeta,    // ker beta != im alpha
  kImageBeta,     // im beta != A_2
  kAlphaBetaNotTwo,
};

struct Violation {
  CoupleDefect defect;
  std::string message;
};

// Empty iff D satisfies every axiom.
std::vector<Violation> validate(const ExactCouple& d);
std::string to_string(CoupleDefect defect);

AbelianGroup phi1(const ExactCouple& d);
AbelianGroup phi2(const ExactCouple& d);
GroupHom phi1(const CoupleMorphism& m);
GroupHom phi2(const CoupleMorphism& m);

// Both squares f2 alpha = alpha'' f1 and f1 beta = beta'' f2 commute.
bool commutes(const CoupleMorphism& m, const ExactCouple& from, const ExactCouple& to);

// m2 o m1, componentwise.
CoupleMorphism compose(const CoupleMorphism& m2, const CoupleMorphism& m1);
CoupleMorphism identity(const ExactCouple& d);
CoupleMorphism doubling(const ExactCouple& d);
CoupleMorphism morphism_add(const CoupleMorphism& x, const CoupleMorphism& y);
CoupleMorphism morphism_scale(const Integer& n, const CoupleMorphism& m);
bool is_zero(const CoupleMorphism& m);
bool is_isomorphism(const CoupleMorphism& m);

/// Hom(D, D'') as the kernel of
///   Hom(A, A'') + Hom(B, B'') -> Hom(A, B'') + Hom(B, A''),
///   (f1, f2) -> (f2 alpha - alpha'' f1, f1 beta - beta'' f2).
class MorphismGroup {
 public:
  MorphismGroup(ExactCouple from, ExactCouple to);

  const ExactCouple& from() const { return from_; }
  const ExactCouple& to() const { return to_; }
  const AbelianGroup& group() const { return group_; }
  // One morphism per canonical generator of group().
  const std::vector<CoupleMorphism>& generators() const { return generators_; }

  CoupleMorphism morphism_at(const GroupElement& x) const;

 private:
  ExactCouple from_;
  ExactCouple to_;
  AbelianGroup group_;
  std::vector<CoupleMorphism> generators_;
};

// Throws AlgebraError if either couple fails validate().
MorphismGroup morphism_group(const ExactCouple& from, const ExactCouple& to);

// Text form of a couple; write_couple(read_couple(s)) == s for every s that
// write_couple produced.
std::string write_couple(const ExactCouple& d);
// Throws std::invalid_argument (with a line number) on malformed input. The
// result is not validated.
ExactCouple read_couple(const std::string& text);

}  // namespace moorecalc
