#include "moorecalc/battery.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "moorecalc/exact_couples.hpp"
#include "moorecalc/functors.hpp"
#include "moorecalc/moore.hpp"
#include "moorecalc/oracle.hpp"
#include "moorecalc/smith.hpp"

namespace moorecalc::battery {

namespace {

// Runs body, catching exceptions as failures, and records wall time.
CheckResult timed(std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = detail.str();
  r.detail.erase(0, r.detail.find_first_not_of(' '));
  return r;
}

AbelianGroup elementary_two_group(std::size_t rank) {
  return AbelianGroup(0, std::vector<Integer>(rank, Integer(2)));
}

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::set<std::string> matrix_set(const std::vector<GroupHom>& homs) {
  std::set<std::string> out;
  for (const auto& h : homs) out.insert(h.matrix().to_string());
  return out;
}

// Every element of a finite group, as coordinate vectors.
std::vector<GroupElement> elements(const AbelianGroup& g) {
  std::vector<GroupElement> out{GroupElement::zero(g)};
  for (std::size_t i = 0; i < g.num_generators(); ++i) {
    const unsigned long order = g.generator_order(i).get_ui();
    const GroupElement e = GroupElement::basis(g, i);
    std::vector<GroupElement> next;
    next.reserve(out.size() * order);
    for (const auto& x : out)
      for (unsigned long k = 0; k < order; ++k) next.push_back(x + Integer(k) * e);
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<AbelianGroup> cyclic_battery() {
  std::vector<AbelianGroup> out{AbelianGroup::free(1)};
  for (long d : {2, 3, 4, 8, 9, 12, 24, 240}) out.push_back(AbelianGroup::cyclic(d));
  return out;
}

std::vector<AbelianGroup> cyclic_battery_with_sums() {
  const auto singles = cyclic_battery();
  std::vector<AbelianGroup> out = singles;
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i; j < singles.size(); ++j) out.push_back(direct_sum(singles[i], singles[j]));
  return out;
}

AbelianGroup random_finite_group(std::mt19937_64& rng, std::size_t max_factors, unsigned max_factor) {
  const std::size_t k = uniform(rng, 1, max_factors);
  std::vector<Integer> chain;
  unsigned long d = uniform(rng, 2, max_factor);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) d *= uniform(rng, 1, max_factor / d);
    chain.emplace_back(d);
  }
  return AbelianGroup(0, std::move(chain));
}

GroupHom random_automorphism(const AbelianGroup& g, std::mt19937_64& rng) {
  const HomGroup h(g, g);
  for (int attempt = 0; attempt < 500; ++attempt) {
    IntVector coords(h.group().num_generators());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const Integer order = h.group().generator_order(i);
      coords[i] = order == 0 ? Integer(static_cast<long>(uniform(rng, 0, 4)) - 2)
                             : Integer(uniform(rng, 0, order.get_ui() - 1));
    }
    GroupHom f = h.hom_at(GroupElement(h.group(), coords));
    if (is_isomorphism(f)) return f;
  }
  return GroupHom::identity(g);
}

CheckResult check_golden_sphere() {
  return timed("golden stems of the sphere", [](std::ostringstream& out) {
    const StemTable t = stem_table(AbelianGroup::free(1));
    const std::vector<AbelianGroup> expected{
        AbelianGroup::free(1),     AbelianGroup::cyclic(2), AbelianGroup::cyclic(2), AbelianGroup::cyclic(24),
        AbelianGroup(),            AbelianGroup(),          AbelianGroup::cyclic(2), AbelianGroup::cyclic(240)};
    bool ok = true;
    for (int q = 0; q <= kMaxStem; ++q) {
      out << (q ? " " : "") << t[q].to_string();
      ok = ok && t[q] == expected[static_cast<std::size_t>(q)];
    }
    return ok;
  });
}

CheckResult check_golden_moore_p() {
  return timed("golden stems of the mod 2 Moore space", [](std::ostringstream& out) {
    const AbelianGroup p = AbelianGroup::cyclic(2);
    const AbelianGroup klein = elementary_two_group(2);
    const AbelianGroup s2 = stable_stem(p, 2), s3 = stable_stem(p, 3), s7 = stable_stem(p, 7);
    out << "q=2 " << s2.to_string() << ", q=3 " << s3.to_string() << ", q=7 " << s7.to_string();
    return s2 == AbelianGroup::cyclic(4) && s3 == klein && s7 == klein;
  });
}

CheckResult check_morphism_groups() {
  return timed("morphism groups", [](std::ostringstream& out) {
    const AbelianGroup z = AbelianGroup::free(1), p = AbelianGroup::cyclic(2);
    const AbelianGroup pp = homotopy_classes(p, p).group();
    const AbelianGroup ps = homotopy_classes(p, z).group();
    out << "[P,P]=" << pp.to_string() << " [P,S]=" << ps.to_string();
    bool ok = pp == AbelianGroup::cyclic(4) && ps == AbelianGroup::cyclic(2);
    std::size_t matched = 0;
    const auto groups = cyclic_battery_with_sums();
    for (const auto& b : groups) {
      if (homotopy_classes(z, b).group() == b)
        ++matched;
      else
        out << " [S," << b.to_string() << "] mismatch";
    }
    out << " [S,B]=B for " << matched << "/" << groups.size();
    return ok && matched == groups.size();
  });
}

CheckResult check_order_identities(Size size, std::uint64_t seed) {
  return timed("order identities", [=](std::ostringstream& out) {
    std::mt19937_64 rng(seed);
    const int samples = size == Size::kFull ? 30 : 8;
    int stem_fail = 0, ses_fail = 0;
    for (int s = 0; s < samples; ++s) {
      const AbelianGroup a = random_finite_group(rng);
      for (int q = 0; q <= kMaxStem; ++q) {
        if (!ahss_order_check(a, q)) {
          ++stem_fail;
          out << " stem fails A=" << a.to_string() << " q=" << q;
        }
      }
    }
    for (int s = 0; s < samples; ++s) {
      const AbelianGroup a = random_finite_group(rng);
      const AbelianGroup b = random_finite_group(rng);
      if (!homotopy_ses_order_check(a, b)) {
        ++ses_fail;
        out << " ses fails A=" << a.to_string() << " B=" << b.to_string();
      }
    }
    out << " " << samples << " groups x 8 stems, " << samples << " pairs";
    return stem_fail == 0 && ses_fail == 0;
  });
}

CheckResult check_lambda_suite(Size size) {
  return timed("lambda isomorphism suite", [=](std::ostringstream& out) {
    std::size_t checked = 0, failed = 0;
    auto check = [&](const AbelianGroup& a, const AbelianGroup& b) {
      ++checked;
      if (!lambda_iso_check(a, b)) {
        ++failed;
        out << " fails (" << a.to_string() << ", " << b.to_string() << ")";
      }
    };
    for (std::size_t i = 0; i <= 3; ++i)
      for (std::size_t j = 0; j <= 3; ++j) check(elementary_two_group(i), elementary_two_group(j));
    const auto battery = size == Size::kFull ? cyclic_battery_with_sums() : cyclic_battery();
    for (std::size_t r = 1; r <= 2; ++r) {
      for (const auto& b : battery) {
        check(elementary_two_group(r), b);
        check(b, elementary_two_group(r));
      }
    }
    out << " " << checked << " pairs";
    return failed == 0;
  });
}

CheckResult check_oracle_equivalence(Size size) {
  return timed("oracle equivalence", [=](std::ostringstream& out) {
    using oracle::FunctorKind;
    const auto groups = size == Size::kFull ? cyclic_battery_with_sums() : cyclic_battery();
    std::size_t functor_pairs = 0, counted = 0, enumerated = 0, spanned = 0, failed = 0;
    auto fail = [&](const char* what, const AbelianGroup& a, const AbelianGroup& b) {
      ++failed;
      out << " " << what << " (" << a.to_string() << ", " << b.to_string() << ")";
    };
    for (const auto& a : groups) {
      for (const auto& b : groups) {
        ++functor_pairs;
        if (!(tensor(a, b) == oracle::cyclic_table_functor(FunctorKind::kTensor, a, b))) fail("tensor", a, b);
        if (!(tor(a, b) == oracle::cyclic_table_functor(FunctorKind::kTor, a, b))) fail("tor", a, b);
        if (!(ext(a, b) == oracle::cyclic_table_functor(FunctorKind::kExt, a, b))) fail("ext", a, b);
        const HomGroup h = hom_group(a, b);
        if (!(h.group() == oracle::cyclic_table_functor(FunctorKind::kHom, a, b))) fail("hom", a, b);
        if (!a.is_finite() || !b.is_finite()) continue;

        const Integer order = h.group().order();
        ++counted;
        if (oracle::count_homs(a, b) != order) fail("hom count", a, b);
        if (order > 4096) continue;
        const auto all = oracle::enumerate_homs(a, b);
        ++enumerated;
        if (Integer(static_cast<unsigned long>(all.size())) != order) fail("hom enumeration", a, b);
        if (order > 512) continue;
        std::vector<GroupHom> generated;
        for (const auto& x : elements(h.group())) generated.push_back(h.hom_at(x));
        ++spanned;
        if (matrix_set(generated) != matrix_set(all)) fail("hom subgroup", a, b);
      }
    }
    out << " functors on " << functor_pairs << " pairs, counts on " << counted << ", enumeration on " << enumerated
        << ", subgroup match on " << spanned;
    return failed == 0;
  });
}

CheckResult check_equivalence_of_categories(Size size, std::uint64_t seed) {
  return timed("equivalence of categories", [=](std::ostringstream& out) {
    std::mt19937_64 rng(seed);
    const int samples = size == Size::kFull ? 50 : 10;
    const auto groups = cyclic_battery_with_sums();
    auto pick = [&]() {
      return uniform(rng, 0, 1) ? groups[uniform(rng, 0, groups.size() - 1)] : random_finite_group(rng, 3, 48);
    };

    int normalized = 0;
    for (int s = 0; s < samples; ++s) {
      const AbelianGroup a = pick();
      const ExactCouple canon = canonical_couple(a);
      const GroupHom sigma = random_automorphism(canon.b, rng);
      GroupHom sigma_inv = GroupHom::zero(canon.b, canon.b);
      {
        IntMatrix m(canon.b.num_generators(), canon.b.num_generators());
        for (std::size_t j = 0; j < canon.b.num_generators(); ++j) {
          const auto x = preimage(sigma, GroupElement::basis(canon.b, j));
          for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = x->coords()[i];
        }
        sigma_inv = GroupHom(canon.b, canon.b, m);
      }
      const ExactCouple moved(a, canon.b, compose(sigma, canon.alpha), compose(canon.beta, sigma_inv));
      const Normalization n = normalize(moved);
      if (n.iso.f1 == identity(a) && is_isomorphism(n.iso) && commutes(n.iso, moved, n.canonical) &&
          n.canonical == canon)
        ++normalized;
      else
        out << " normalize fails A=" << a.to_string();
    }

    // A mutant that still satisfies the axioms element-wise is equivalent,
    // not corrupt; validate must then accept it.
    int rejected = 0, corruptions = 0, equivalent = 0, disagreements = 0;
    while (corruptions < samples) {
      const AbelianGroup a = random_finite_group(rng, 3, 48);
      const ExactCouple canon = canonical_couple(a);
      const bool hit_alpha = uniform(rng, 0, 1) == 0;
      const GroupHom& target = hit_alpha ? canon.alpha : canon.beta;
      const HomGroup h(target.source(), target.target());
      std::vector<std::size_t> movable;
      for (std::size_t k = 0; k < h.num_entries(); ++k)
        if (h.entry_orders()[k] != 1) movable.push_back(k);
      if (movable.empty()) continue;
      const std::size_t k = movable[uniform(rng, 0, movable.size() - 1)];
      const Integer order = h.entry_orders()[k];
      IntVector unit(h.num_entries());
      unit[k] = Integer(uniform(rng, 1, order.get_ui() - 1));
      const GroupHom changed = hom_add(target, h.hom_from_entries(unit));
      const ExactCouple mutant = hit_alpha ? ExactCouple(a, canon.b, changed, canon.beta)
                                           : ExactCouple(a, canon.b, canon.alpha, changed);
      const bool valid = oracle::couple_axioms_element_check(mutant);
      const bool accepted = validate(mutant).empty();
      if (valid != accepted) {
        ++disagreements;
        out << " validate disagrees with the element check on A=" << a.to_string();
      }
      if (valid) {
        ++equivalent;
        continue;
      }
      ++corruptions;
      if (!accepted) ++rejected;
    }
    out << " normalized " << normalized << "/" << samples << ", rejected " << rejected << "/" << corruptions
        << " corruptions (" << equivalent << " equivalent mutants accepted)";
    return normalized == samples && rejected == corruptions && disagreements == 0;
  });
}

CheckResult check_couple_relations() {
  return timed("couple relations", [](std::ostringstream& out) {
    const auto r = oracle::couple_relations_check();
    out << "2theta=0:" << r.two_theta_zero << " 2lambda=0:" << r.two_lambda_zero
        << " lambda.theta=0:" << r.lambda_theta_zero << " theta.lambda=2:" << r.theta_lambda_doubling;
    return r.all();
  });
}

CheckResult check_snf_properties(Size size, std::uint64_t seed) {
  return timed("smith normal form properties", [=](std::ostringstream& out) {
    std::mt19937_64 rng(seed);
    const int samples = size == Size::kFull ? 200 : 40;
    int failed = 0;
    for (int s = 0; s < samples; ++s) {
      const std::size_t rows = uniform(rng, 1, 6), cols = uniform(rng, 1, 6);
      IntMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(uniform(rng, 0, 200)) - 100;
      const SmithForm f = smith_normal_form(m);
      bool ok = f.U * m * f.V == f.D;
      ok = ok && abs(f.U.determinant()) == 1 && abs(f.V.determinant()) == 1;
      ok = ok && f.U * f.U_inv == IntMatrix::identity(rows) && f.V * f.V_inv == IntMatrix::identity(cols);
      for (std::size_t i = 0; ok && i < rows; ++i)
        for (std::size_t j = 0; ok && j < cols; ++j) ok = (i == j) ? f.D(i, j) >= 0 : f.D(i, j) == 0;
      const std::size_t diag = std::min(rows, cols);
      for (std::size_t i = 0; ok && i + 1 < diag; ++i) {
        const Integer& d = f.D(i, i);
        const Integer& e = f.D(i + 1, i + 1);
        ok = d == 0 ? e == 0 : e % d == 0;
      }
      if (!ok) {
        ++failed;
        out << " fails on " << m.to_string();
      }
    }
    out << " " << samples << " matrices";
    return failed == 0;
  });
}

std::vector<CheckResult> run_battery(Size size) {
  return {check_golden_sphere(),
          check_golden_moore_p(),
          check_morphism_groups(),
          check_order_identities(size),
          check_lambda_suite(size),
          check_oracle_equivalence(size),
          check_equivalence_of_categories(size),
          check_couple_relations(),
          check_snf_properties(size)};
}

}  // namespace moorecalc::battery
