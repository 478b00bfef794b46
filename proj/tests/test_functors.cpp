#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "moorecalc/battery.hpp"
#include "moorecalc/functors.hpp"
#include "moorecalc/oracle.hpp"

using namespace moorecalc;
using test::C;
using test::finite;
using test::Z;

namespace {

GroupElement element(const AbelianGroup& g, std::vector<long> coords) {
  return GroupElement(g, IntVector(coords.begin(), coords.end()));
}

GroupElement random_element(const AbelianGroup& g, std::mt19937_64& rng) {
  IntVector v(g.num_generators());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Integer o = g.generator_order(i);
    v[i] = o == 0 ? Integer(static_cast<long>(rng() % 9) - 4) : Integer(rng() % o.get_ui());
  }
  return GroupElement(g, v);
}

GroupHom random_hom(const AbelianGroup& a, const AbelianGroup& b, std::mt19937_64& rng) {
  const HomGroup h(a, b);
  return h.hom_at(random_element(h.group(), rng));
}

// lambda(c) as a map A_2 -> B/2.
GroupHom lambda_at(const AbelianGroup& a, const AbelianGroup& b, const GroupElement& cls) {
  const HomGroup target(n_torsion(a, 2), quotient_by_n(b, 2));
  return target.hom_at(apply(lambda_map(a, b), cls));
}

}  // namespace

TEST_CASE("tensor products") {
  CHECK(tensor(Z(), C(24)) == C(24));
  CHECK(tensor(C(2), C(2)) == C(2));
  CHECK(tensor(C(12), C(8)) == C(4));
  CHECK(tensor(Z(2), Z()) == Z(2));
  CHECK(tensor(AbelianGroup(), C(5)) == AbelianGroup());
}

TEST_CASE("torsion products") {
  CHECK(tor(Z(), C(24)) == AbelianGroup());
  CHECK(tor(C(2), C(24)) == C(2));
  CHECK(tor(C(12), C(8)) == C(4));
  CHECK(tor(C(3), C(4)) == AbelianGroup());
}

TEST_CASE("extension groups") {
  CHECK(ext(Z(), C(2)) == AbelianGroup());
  CHECK(ext(C(2), C(2)) == C(2));
  CHECK(ext(C(12), C(8)) == C(4));
  CHECK(ext(C(3), Z()) == C(3));
  CHECK(ext(finite({2, 4}), Z()) == finite({2, 4}));
}

TEST_CASE("functors match the cyclic tables on the battery") {
  using oracle::FunctorKind;
  const auto groups = battery::cyclic_battery();
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      CHECK(tensor(a, b) == oracle::cyclic_table_functor(FunctorKind::kTensor, a, b));
      CHECK(tor(a, b) == oracle::cyclic_table_functor(FunctorKind::kTor, a, b));
      CHECK(ext(a, b) == oracle::cyclic_table_functor(FunctorKind::kExt, a, b));
    }
  }
}

TEST_CASE("realizing extension classes") {
  const ExtGroup e22(C(2), C(2));
  CHECK(ext_realize(C(2), C(2), element(e22.group(), {0})).realization.E == finite({2, 2}));
  CHECK(ext_realize(C(2), C(2), element(e22.group(), {1})).realization.E == C(4));
  const ExtGroup e24(C(2), C(4));
  CHECK(ext_realize(C(2), C(4), element(e24.group(), {1})).realization.E == C(8));
  CHECK(ext_realize(C(3), Z(), element(ExtGroup(C(3), Z()).group(), {1})).realization.E == Z());
  CHECK_THROWS_AS(ext_realize(C(2), C(2), element(C(4), {1})), std::invalid_argument);
}

TEST_CASE("realizations are exact and classify back to their class") {
  const auto groups = battery::cyclic_battery_with_sums();
  std::mt19937_64 rng(3);
  for (int s = 0; s < 80; ++s) {
    const AbelianGroup a = groups[rng() % groups.size()], b = groups[rng() % groups.size()];
    const ExtGroup eg(a, b);
    const GroupElement cls = random_element(eg.group(), rng);
    const ExtClass r = ext_realize(a, b, cls);
    CHECK(is_short_exact(r.realization));
    if (r.realization.E.is_finite() && r.realization.E.order() <= 100000)
      CHECK(oracle::exactness_element_check(r.realization));
    CHECK(ext_classify(a, b, r.realization) == cls);
  }
}

TEST_CASE("classification rejects sequences that are not exact") {
  const ExtClass r = ext_realize(C(2), C(2), element(ExtGroup(C(2), C(2)).group(), {1}));
  Extension broken = r.realization;
  broken.g = GroupHom::zero(broken.E, C(2));
  CHECK_FALSE(is_short_exact(broken));
  CHECK_THROWS_AS(ext_classify(C(2), C(2), broken), AlgebraError);
}

TEST_CASE("cocycles round trip") {
  const ExtGroup eg(finite({2, 4}), finite({2, 8}));
  for (std::size_t i = 0; i < eg.group().num_generators(); ++i) {
    const GroupElement g = GroupElement::basis(eg.group(), i);
    CHECK(eg.class_of(eg.cocycle(g)) == g);
  }
}

TEST_CASE("lambda on the examples") {
  const GroupHom l = lambda_map(C(4), C(2));
  CHECK(l.source() == C(2));
  CHECK(is_isomorphism(l));
  CHECK(lambda_iso_check(finite({2, 2}), finite({2, 2})));
  CHECK(lambda_iso_check(C(2), C(12)));
  CHECK_FALSE(lambda_iso_check(C(4), C(4)));
}

TEST_CASE("lambda agrees with the lift-double-pullback recipe and is additive") {
  const auto groups = battery::cyclic_battery_with_sums();
  std::mt19937_64 rng(17);
  for (int s = 0; s < 60; ++s) {
    const AbelianGroup a = groups[rng() % groups.size()], b = groups[rng() % groups.size()];
    const ExtGroup eg(a, b);
    const GroupElement x = random_element(eg.group(), rng), y = random_element(eg.group(), rng);
    const GroupHom lx = lambda_of_extension(a, b, ext_realize(a, b, x).realization);
    const GroupHom ly = lambda_of_extension(a, b, ext_realize(a, b, y).realization);
    const GroupHom lxy = lambda_of_extension(a, b, ext_realize(a, b, x + y).realization);
    CHECK(lx == lambda_at(a, b, x));
    CHECK(lxy == hom_add(lx, ly));
  }
}

TEST_CASE("lambda is natural in both variables") {
  const auto groups = battery::cyclic_battery_with_sums();
  std::mt19937_64 rng(23);
  for (int s = 0; s < 60; ++s) {
    const AbelianGroup a = groups[rng() % groups.size()], a2 = groups[rng() % groups.size()];
    const AbelianGroup b = groups[rng() % groups.size()], b2 = groups[rng() % groups.size()];
    const GroupElement cls = random_element(ExtGroup(a, b).group(), rng);
    const GroupHom lam = lambda_at(a, b, cls);

    const GroupHom u = random_hom(a2, a, rng);
    const GroupElement pulled = apply(ext_pullback(u, b), cls);
    CHECK(lambda_at(a2, b, pulled) == compose(lam, restrict_to_torsion(u, 2)));

    const GroupHom v = random_hom(b, b2, rng);
    const GroupElement pushed = apply(ext_pushforward(a, v), cls);
    CHECK(lambda_at(a, b2, pushed) == compose(induced_on_quotient(v, 2), lam));
  }
}

TEST_CASE("lambda is an isomorphism when either side is killed by 2") {
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j)
      CHECK(lambda_iso_check(AbelianGroup(0, std::vector<Integer>(i, Integer(2))),
                             AbelianGroup(0, std::vector<Integer>(j, Integer(2)))));
  for (const auto& g : battery::cyclic_battery()) {
    CHECK(lambda_iso_check(C(2), g));
    CHECK(lambda_iso_check(g, finite({2, 2})));
  }
}
