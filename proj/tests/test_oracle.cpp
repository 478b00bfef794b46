#include <doctest.h>

#include "helpers.hpp"
#include "moorecalc/functors.hpp"
#include "moorecalc/moore.hpp"
#include "moorecalc/oracle.hpp"

using namespace moorecalc;
using namespace moorecalc::oracle;
using test::C;
using test::finite;
using test::Z;

TEST_CASE("enumerating homomorphisms") {
  CHECK(enumerate_homs(C(2), C(2)).size() == 2);
  CHECK(enumerate_homs(C(4), C(6)).size() == 2);
  CHECK(enumerate_homs(finite({2, 2}), C(2)).size() == 4);
  CHECK(enumerate_homs(AbelianGroup(), C(5)).size() == 1);
  CHECK(count_homs(finite({4, 24}), C(12)) == 4 * 12);
  CHECK_THROWS_AS(enumerate_homs(Z(), C(2)), AlgebraError);
  CHECK_THROWS_AS(enumerate_homs(finite({240, 240}), finite({240, 240})), SizeGuardError);
}

TEST_CASE("cyclic tables") {
  CHECK(cyclic_table_functor(FunctorKind::kExt, Z(), C(7)) == AbelianGroup());
  CHECK(cyclic_table_functor(FunctorKind::kTor, C(12), C(8)) == C(4));
  CHECK(cyclic_table_functor(FunctorKind::kHom, C(2), C(24)) == C(2));
  CHECK(cyclic_table_functor(FunctorKind::kHom, Z(), Z()) == Z());
  CHECK(cyclic_table_functor(FunctorKind::kExt, C(3), Z()) == C(3));
  CHECK(cyclic_table_functor(FunctorKind::kTensor, Z(2), C(4)) == finite({4, 4}));
}

TEST_CASE("assembling cyclic sums from prime powers") {
  CHECK(assemble_cyclic_sum(0, {12, 8}) == finite({4, 24}));
  CHECK(assemble_cyclic_sum(0, {2, 3}) == C(6));
  CHECK(assemble_cyclic_sum(2, {1}) == Z(2));
  CHECK(assemble_cyclic_sum(0, {}) == AbelianGroup());
}

TEST_CASE("element-wise exactness") {
  const DirectSum s = direct_sum_with_maps(C(2), C(2));
  CHECK(exactness_element_check({s.group, s.inject_first, s.project_second}));
  const ExtClass nonsplit = ext_realize(C(2), C(2), GroupElement(C(2), {1}));
  CHECK(exactness_element_check(nonsplit.realization));
  Extension broken = nonsplit.realization;
  broken.g = GroupHom::zero(broken.E, C(2));
  CHECK_FALSE(exactness_element_check(broken));
}

TEST_CASE("relations between the sphere and mod 2 couples") {
  const CoupleRelations r = couple_relations_check();
  CHECK(r.two_theta_zero);
  CHECK(r.two_lambda_zero);
  CHECK(r.lambda_theta_zero);
  CHECK(r.theta_lambda_doubling);
}

TEST_CASE("element-wise pushouts") {
  CHECK(pushout_element_oracle(GroupHom::zero(AbelianGroup(), C(4)), GroupHom::zero(AbelianGroup(), C(6))) ==
        finite({2, 12}));
  const GroupHom two(C(2), C(4), IntMatrix{{2}});
  const AbelianGroup p3 = pushout_element_oracle(two, GroupHom::zero(C(2), C(2)));
  CHECK(p3.order() == 4);
  CHECK(p3.exponent() == 2);

  const ExactCouple d = canonical_couple(C(4));
  const GroupHom alpha_bar = factor_through_quotient(d.alpha, 2);
  const GroupHom times12 =
      factor_through_quotient(compose(quotient_map(C(4), 24), GroupHom::multiplication(C(4), 12)), 2);
  const AbelianGroup q3 = pushout_element_oracle(alpha_bar, times12);
  CHECK(q3.order() == 8);
  CHECK(q3.exponent() == 4);
}

TEST_CASE("closed form of the middle group") {
  CHECK(closed_form_prime(Z()) == C(2));
  CHECK(closed_form_prime(C(2)) == C(4));
  CHECK(closed_form_prime(C(6)) == C(4));
  CHECK(closed_form_prime(C(4)) == finite({2, 2}));
  CHECK(closed_form_prime(C(9)) == AbelianGroup());
  CHECK(closed_form_prime(finite({2, 4})) == finite({2, 2, 4}));
}
