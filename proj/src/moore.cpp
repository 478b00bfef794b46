#include "moorecalc/moore.hpp"

#include "moorecalc/functors.hpp"
#include "moorecalc/presentation.hpp"

namespace moorecalc {

namespace pres = presentation;

AbelianGroup sphere_stem(int q) {
  switch (q) {
    case -1: return {};
    case 0: return AbelianGroup::free(1);
    case 1: return AbelianGroup::cyclic(2);
    case 2: return AbelianGroup::cyclic(2);
    case 3: return AbelianGroup::cyclic(24);
    case 4: return {};
    case 5: return {};
    case 6: return AbelianGroup::cyclic(2);
    case 7: return AbelianGroup::cyclic(240);
    default: throw std::out_of_range("sphere_stem: degree outside 0..7");
  }
}

ExactCouple canonical_couple(const AbelianGroup& a) {
  const GroupHom incl = torsion_inclusion(a, 2);  // A_2 -> A
  const GroupHom proj = quotient_map(a, 2);       // A -> A/2
  const AbelianGroup& a2 = incl.source();
  const AbelianGroup& a_mod2 = proj.target();

  // lambda lands in Hom((A_2)_2, (A/2)/2); carry A_2 -> A/2 over to it.
  const GroupHom natural = compose(proj, incl);
  const GroupHom target_natural =
      compose(quotient_map(a_mod2, 2), compose(natural, torsion_inclusion(a2, 2)));
  const GroupHom lambda = lambda_map(a2, a_mod2);
  const HomGroup lambda_target(n_torsion(a2, 2), quotient_by_n(a_mod2, 2));
  auto cls = preimage(lambda, lambda_target.coordinates(target_natural));
  if (!cls) throw AlgebraError("canonical_couple: natural map outside the image of lambda");

  const ExtClass ext_cls = ext_realize(a2, a_mod2, *cls);
  const Extension& e = ext_cls.realization;
  return ExactCouple(a, e.E, compose(e.f, proj), compose(incl, e.g));
}

MorphismGroup homotopy_classes(const AbelianGroup& a, const AbelianGroup& b) {
  return MorphismGroup(canonical_couple(a), canonical_couple(b));
}

Normalization normalize(const ExactCouple& d) {
  const auto violations = validate(d);
  if (!violations.empty()) {
    std::string msg = "couple violates the exact couple axioms:";
    for (const auto& v : violations) msg += " [" + v.message + "]";
    throw AlgebraError(msg);
  }
  ExactCouple canonical = canonical_couple(d.a);
  if (!(canonical.b == d.b)) throw AlgebraError("couple violates the exact couple axioms: B is not A'");
  if (d == canonical) return {canonical, identity(canonical)};

  // f2: B -> A' with f2 alpha = alpha' and beta' f2 = beta.
  const HomGroup h(d.b, canonical.b);
  const HomGroup top(d.a, canonical.b);
  const HomGroup bottom(d.b, d.a);
  IntVector dst_orders = top.entry_orders();
  dst_orders.insert(dst_orders.end(), bottom.entry_orders().begin(), bottom.entry_orders().end());

  IntMatrix constraint(dst_orders.size(), h.num_entries());
  for (std::size_t k = 0; k < h.num_entries(); ++k) {
    IntVector unit(h.num_entries());
    unit[k] = 1;
    const GroupHom f2 = h.hom_from_entries(unit);
    IntVector col = top.entry_coordinates(compose(f2, d.alpha));
    const IntVector lower = bottom.entry_coordinates(compose(canonical.beta, f2));
    col.insert(col.end(), lower.begin(), lower.end());
    for (std::size_t i = 0; i < col.size(); ++i) constraint(i, k) = col[i];
  }
  IntVector rhs = top.entry_coordinates(canonical.alpha);
  const IntVector lower = bottom.entry_coordinates(d.beta);
  rhs.insert(rhs.end(), lower.begin(), lower.end());

  auto sol = pres::solve(constraint, IntMatrix::diagonal(dst_orders), rhs);
  if (!sol) throw AlgebraError("couple violates the exact couple axioms: no isomorphism to the canonical couple");
  CoupleMorphism iso{identity(d.a), h.hom_from_entries(*sol)};
  if (!commutes(iso, d, canonical) || !is_isomorphism(iso.f2))
    throw AlgebraError("couple violates the exact couple axioms: comparison map is not an isomorphism");
  return {std::move(canonical), std::move(iso)};
}

AbelianGroup pushout(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.source())) throw std::invalid_argument("pushout: maps have different sources");
  const IntMatrix map = f.matrix().vstack(-g.matrix());
  const IntMatrix rel = pres::relations_of_sum({f.target(), g.target()});
  return pres::cokernel(map, rel).group;
}

AbelianGroup stable_stem(const AbelianGroup& a, int q) {
  switch (q) {
    case 0: return a;
    case 1: return quotient_by_n(a, 2);
    case 2: return canonical_couple(a).b;
    case 3: {
      const ExactCouple d = canonical_couple(a);
      const GroupHom alpha_bar = factor_through_quotient(d.alpha, 2);
      const GroupHom times12 =
          factor_through_quotient(compose(quotient_map(a, 24), GroupHom::multiplication(a, 12)), 2);
      return pushout(alpha_bar, times12);
    }
    case 4: return n_torsion(a, 24);
    case 5: return {};
    case 6: return quotient_by_n(a, 2);
    case 7: return direct_sum(quotient_by_n(a, 240), n_torsion(a, 2));
    default: throw std::out_of_range("stable_stem: degree outside 0..7");
  }
}

StemTable stem_table(const AbelianGroup& a) {
  StemTable t;
  for (int q = 0; q <= kMaxStem; ++q) t.entries[static_cast<std::size_t>(q)] = stable_stem(a, q);
  return t;
}

bool ahss_order_check(const AbelianGroup& a, int q) {
  if (!a.is_finite()) throw AlgebraError("ahss_order_check: A must be finite");
  if (q < 0 || q > kMaxStem) throw std::out_of_range("ahss_order_check: degree outside 0..7");
  const Integer lhs = stable_stem(a, q).order();
  const Integer rhs = tensor(a, sphere_stem(q)).order() * tor(a, sphere_stem(q - 1)).order();
  return lhs == rhs;
}

bool homotopy_ses_order_check(const AbelianGroup& a, const AbelianGroup& b) {
  if (!a.is_finite() || !b.is_finite()) throw AlgebraError("homotopy_ses_order_check: groups must be finite");
  const Integer lhs = homotopy_classes(a, b).group().order();
  const Integer rhs = ext(a, quotient_by_n(b, 2)).order() * hom_group(a, b).group().order();
  return lhs == rhs;
}

}  // namespace moorecalc
