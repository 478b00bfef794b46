#pragma once

// Brute-force verifiers over finite groups. Nothing here goes through Smith
// normal form: groups are enumerated element by element and structure is read
// back from element-order counts or prime-power bookkeeping.

#include <cstdint>
#include <vector>

#include "moorecalc/exact_couples.hpp"
#include "moorecalc/fga.hpp"
#include "moorecalc/functors.hpp"

namespace moorecalc::oracle {

inline constexpr std::uint64_t kSizeGuard = 1'000'000;

class SizeGuardError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Every homomorphism A -> B, enumerated by generator images of compatible
// order. Throws SizeGuardError beyond kSizeGuard candidate maps.
std::vector<GroupHom> enumerate_homs(const AbelianGroup& a, const AbelianGroup& b);

// |Hom(A, B)| as the product over generators of A of the number of elements
// of B killed by that generator's order. Needs only |B| <= kSizeGuard.
Integer count_homs(const AbelianGroup& a, const AbelianGroup& b);

enum class FunctorKind { kTensor, kTor, kExt, kHom };

// Classical cyclic tables summed over the cyclic factors of A and B.
AbelianGroup cyclic_table_functor(FunctorKind kind, const AbelianGroup& a, const AbelianGroup& b);

// Canonical form of Z^rank + sum of Z/n_i (n_i >= 1), assembled from the
// prime-power factors of each n_i.
AbelianGroup assemble_cyclic_sum(std::size_t rank, const std::vector<std::uint64_t>& orders);

// Element-wise check that f is injective, g surjective and im f = ker g.
// Throws AlgebraError on infinite groups, SizeGuardError on large ones.
bool exactness_element_check(const Extension& e);

// The couple axioms decided on explicit element sets: ker alpha = 2A,
// ker beta = im alpha, im beta = A_2 and alpha beta = 2 on B. Needs finite A.
bool couple_axioms_element_check(const ExactCouple& d);

struct CoupleRelations {
  bool two_theta_zero = false;
  bool two_lambda_zero = false;
  bool lambda_theta_zero = false;
  bool theta_lambda_doubling = false;

  bool all() const { return two_theta_zero && two_lambda_zero && lambda_theta_zero && theta_lambda_doubling; }
};

// Relations between theta in Hom(D_S, D_P) and lambda in Hom(D_P, D_S).
CoupleRelations couple_relations_check();

// (X + Y) / {(f(c), -g(c))} by explicit cosets.
AbelianGroup pushout_element_oracle(const GroupHom& f, const GroupHom& g);

// A' from the per-factor rule: Z -> Z/2, d = 2 mod 4 -> Z/4,
// 4 | d -> Z/2 + Z/2, d odd -> 0.
AbelianGroup closed_form_prime(const AbelianGroup& a);

}  // namespace moorecalc::oracle
