#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "moorecalc/battery.hpp"
#include "moorecalc/exact_couples.hpp"
#include "moorecalc/moore.hpp"
#include "moorecalc/oracle.hpp"

using namespace moorecalc;
using test::C;
using test::finite;
using test::Z;

namespace {

ExactCouple sphere_couple() {
  return ExactCouple(Z(), C(2), GroupHom(Z(), C(2), IntMatrix{{1}}), GroupHom::zero(C(2), Z()));
}

ExactCouple mod2_couple() {
  return ExactCouple(C(2), C(4), GroupHom(C(2), C(4), IntMatrix{{2}}), GroupHom(C(4), C(2), IntMatrix{{1}}));
}

}  // namespace

TEST_CASE("validate accepts the sphere and mod 2 couples") {
  CHECK(validate(sphere_couple()).empty());
  CHECK(validate(mod2_couple()).empty());
}

TEST_CASE("validate rejects the split couple over Z/2") {
  const AbelianGroup klein = finite({2, 2});
  const ExactCouple split(C(2), klein, GroupHom(C(2), klein, IntMatrix{{1}, {0}}),
                          GroupHom(klein, C(2), IntMatrix{{0, 1}}));
  const auto v = validate(split);
  REQUIRE_FALSE(v.empty());
  bool saw_two = false;
  for (const auto& x : v) saw_two = saw_two || x.defect == CoupleDefect::kAlphaBetaNotTwo;
  CHECK(saw_two);
  CHECK_FALSE(oracle::couple_axioms_element_check(split));
}

TEST_CASE("validate matches the element-wise axiom check on random mutants") {
  std::mt19937_64 rng(31);
  int invalid = 0;
  for (int s = 0; s < 120; ++s) {
    const ExactCouple canon = canonical_couple(battery::random_finite_group(rng, 3, 24));
    const bool hit_alpha = rng() % 2 == 0;
    const GroupHom& f = hit_alpha ? canon.alpha : canon.beta;
    const HomGroup h(f.source(), f.target());
    if (h.num_entries() == 0) continue;
    IntVector delta(h.num_entries());
    const std::size_t k = rng() % h.num_entries();
    if (h.entry_orders()[k] == 1) continue;
    delta[k] = 1 + rng() % (h.entry_orders()[k].get_ui() - 1);
    const GroupHom changed = hom_add(f, h.hom_from_entries(delta));
    const ExactCouple mutant = hit_alpha ? ExactCouple(canon.a, canon.b, changed, canon.beta)
                                         : ExactCouple(canon.a, canon.b, canon.alpha, changed);
    const bool valid = oracle::couple_axioms_element_check(mutant);
    CHECK(validate(mutant).empty() == valid);
    invalid += valid ? 0 : 1;
  }
  CHECK(invalid > 50);
}

TEST_CASE("construction checks sources and targets") {
  CHECK_THROWS_AS(ExactCouple(C(2), C(4), GroupHom(C(4), C(2), IntMatrix{{1}}), GroupHom(C(4), C(2), IntMatrix{{1}})),
                  std::invalid_argument);
}

TEST_CASE("morphism groups of the basic couples") {
  CHECK(morphism_group(mod2_couple(), mod2_couple()).group() == C(4));
  CHECK(morphism_group(mod2_couple(), sphere_couple()).group() == C(2));
  for (const auto& a : battery::cyclic_battery_with_sums())
    CHECK(morphism_group(sphere_couple(), canonical_couple(a)).group() == a);
  CHECK_THROWS_AS(morphism_group(ExactCouple(C(2), C(2), identity(C(2)), identity(C(2))), mod2_couple()),
                  AlgebraError);
}

TEST_CASE("morphism group generators commute and include identity and doubling") {
  for (const auto& a : {C(2), C(4), finite({2, 4}), Z()}) {
    const ExactCouple d = canonical_couple(a);
    const MorphismGroup mg(d, d);
    for (const auto& m : mg.generators()) CHECK(commutes(m, d, d));
    CHECK(commutes(identity(d), d, d));
    CHECK(commutes(doubling(d), d, d));
  }
}

TEST_CASE("composition of couple morphisms") {
  const ExactCouple p = mod2_couple();
  const CoupleMorphism four = compose(doubling(p), doubling(p));
  CHECK(is_zero(four));
  CHECK(four == morphism_scale(4, identity(p)));
  CHECK(compose(identity(p), doubling(p)) == doubling(p));
  CHECK(is_isomorphism(identity(p)));
  CHECK_FALSE(is_isomorphism(doubling(p)));
  CHECK(morphism_add(doubling(p), doubling(p)) == four);
}

TEST_CASE("the two functors") {
  CHECK(phi1(mod2_couple()) == C(2));
  CHECK(phi2(mod2_couple()) == C(4));
  CHECK(phi2(sphere_couple()) == C(2));
  CHECK(phi2(doubling(mod2_couple())) == GroupHom::multiplication(C(4), 2));
}

TEST_CASE("couple files round trip") {
  for (const auto& a : battery::cyclic_battery_with_sums()) {
    const ExactCouple d = canonical_couple(a);
    const std::string text = write_couple(d);
    CHECK(read_couple(text) == d);
    CHECK(write_couple(read_couple(text)) == text);
  }
  CHECK(read_couple("# comment\n\n" + write_couple(mod2_couple())) == mod2_couple());
}

TEST_CASE("malformed couple files name the line") {
  const std::string good = write_couple(mod2_couple());
  auto message = [](const std::string& text) {
    try {
      read_couple(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("exact-couple v2\n").find("line 1") != std::string::npos);
  CHECK(message(good + "extra\n").find("trailing") != std::string::npos);
  std::string bad_entry = good;
  bad_entry.replace(bad_entry.find("alpha 1 1\n2"), 11, "alpha 1 1\nx");
  CHECK(message(bad_entry).find("line 5") != std::string::npos);
  std::string bad_shape = good;
  bad_shape.replace(bad_shape.find("alpha 1 1"), 9, "alpha 2 1");
  CHECK(message(bad_shape).find("wrong shape") != std::string::npos);
  CHECK_FALSE(message("exact-couple v1\nA rank 0 torsion 2\n").empty());
  CHECK_FALSE(message("exact-couple v1\nA rank 0 torsion 2\nB rank 0 torsion 4\nalpha 1 1\n1\nbeta 1 1\n1\n").empty());
}
