#include "moorecalc/functors.hpp"

#include "moorecalc/presentation.hpp"

namespace moorecalc {

namespace pres = presentation;

namespace {

std::vector<AbelianGroup> copies(const AbelianGroup& g, std::size_t n) {
  return std::vector<AbelianGroup>(n, g);
}

// R (x) 1_B : B^k -> B^n for the canonical presentation matrix R of A.
IntMatrix presentation_tensor_b(const AbelianGroup& a, const AbelianGroup& b) {
  const std::size_t mb = b.num_generators();
  const std::size_t na = a.num_generators();
  const std::size_t ka = a.torsion().size();
  IntMatrix m(na * mb, ka * mb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t t = 0; t < mb; ++t) m((a.rank() + i) * mb + t, i * mb + t) = a.torsion()[i];
  return m;
}

std::vector<GroupElement> split_blocks(const AbelianGroup& b, const IntVector& v) {
  const std::size_t mb = b.num_generators();
  std::vector<GroupElement> out;
  for (std::size_t i = 0; mb != 0 && i < v.size() / mb; ++i)
    out.emplace_back(b, IntVector(v.begin() + static_cast<std::ptrdiff_t>(i * mb),
                                  v.begin() + static_cast<std::ptrdiff_t>((i + 1) * mb)));
  return out;
}

}  // namespace

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  const IntMatrix target_rel = pres::relations_of_sum(copies(b, a.num_generators()));
  return pres::cokernel(presentation_tensor_b(a, b), target_rel).group;
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
  const IntMatrix source_rel = pres::relations_of_sum(copies(b, a.torsion().size()));
  const IntMatrix target_rel = pres::relations_of_sum(copies(b, a.num_generators()));
  return pres::kernel(presentation_tensor_b(a, b), source_rel, target_rel).group;
}

AbelianGroup ext(const AbelianGroup& a, const AbelianGroup& b) { return ExtGroup(a, b).group(); }

// ---------------------------------------------------------------- ExtGroup

ExtGroup::ExtGroup(AbelianGroup a, AbelianGroup b) : a_(std::move(a)), b_(std::move(b)) {
  // Restriction along R: Hom(Z^n, B) = B^n -> Hom(Z^k, B) = B^k sends
  // (b_j) to (d_i b_{rank+i}), which is the transpose-shaped twin of R (x) 1_B.
  const IntMatrix restriction = presentation_tensor_b(a_, b_).transpose();
  const IntMatrix target_rel = pres::relations_of_sum(copies(b_, a_.torsion().size()));
  pres::Canonical c = pres::cokernel(restriction, target_rel);
  group_ = c.group;
  to_canonical_ = std::move(c.to_canonical);
  from_canonical_ = std::move(c.from_canonical);
}

GroupElement ExtGroup::class_of(const std::vector<GroupElement>& cocycle) const {
  if (cocycle.size() != a_.torsion().size()) throw std::invalid_argument("ExtGroup: cocycle length");
  IntVector v;
  for (const auto& x : cocycle) {
    if (!(x.group() == b_)) throw std::invalid_argument("ExtGroup: cocycle value outside B");
    v.insert(v.end(), x.coords().begin(), x.coords().end());
  }
  return GroupElement(group_, to_canonical_ * v);
}

std::vector<GroupElement> ExtGroup::cocycle(const GroupElement& cls) const {
  if (!(cls.group() == group_)) throw std::invalid_argument("ExtGroup: class outside Ext(A, B)");
  std::vector<GroupElement> out = split_blocks(b_, from_canonical_ * cls.coords());
  if (b_.num_generators() == 0) out.assign(a_.torsion().size(), GroupElement::zero(b_));
  return out;
}

// ---------------------------------------------------------------- extensions

ExtClass ext_realize(const AbelianGroup& a, const AbelianGroup& b, const GroupElement& coords) {
  ExtGroup ext_ab(a, b);
  if (!(coords.group() == ext_ab.group()))
    throw std::invalid_argument("ext_realize: coordinates do not belong to Ext(A, B)");
  const std::vector<GroupElement> c = ext_ab.cocycle(coords);

  // Generators: those of B, then one lift per generator of A. Relations: B's
  // own, and d_i * lift_{rank+i} = c_i for every invariant factor d_i of A.
  const std::size_t mb = b.num_generators();
  const std::size_t na = a.num_generators();
  const std::size_t ka = a.torsion().size();
  IntMatrix rel(mb + na, b.torsion().size() + ka);
  const IntMatrix rb = b.relation_matrix();
  for (std::size_t i = 0; i < mb; ++i)
    for (std::size_t j = 0; j < rb.cols(); ++j) rel(i, j) = rb(i, j);
  for (std::size_t i = 0; i < ka; ++i) {
    const std::size_t col = rb.cols() + i;
    for (std::size_t t = 0; t < mb; ++t) rel(t, col) = -c[i].coords()[t];
    rel(mb + a.rank() + i, col) = a.torsion()[i];
  }
  pres::Canonical e = pres::canonicalize(rel);
  const std::size_t ne = e.group.num_generators();
  GroupHom f(b, e.group, e.to_canonical.block(0, 0, ne, mb));
  GroupHom g(e.group, a, e.from_canonical.block(mb, 0, na, ne));
  return ExtClass{ext_ab.group(), coords, Extension{e.group, std::move(f), std::move(g)}};
}

bool is_short_exact(const Extension& e) {
  return is_injective(e.f) && is_surjective(e.g) && compose(e.g, e.f).is_zero() &&
         subgroup_equal(image(e.f).map, kernel(e.g).map);
}

GroupElement ext_classify(const AbelianGroup& a, const AbelianGroup& b, const Extension& e) {
  if (!(e.f.source() == b) || !(e.g.target() == a) || !(e.f.target() == e.E) || !(e.g.source() == e.E))
    throw std::invalid_argument("ext_classify: witness does not match (A, B)");
  if (!is_short_exact(e)) throw AlgebraError("ext_classify: witness is not short exact");
  std::vector<GroupElement> cocycle;
  for (std::size_t i = 0; i < a.torsion().size(); ++i) {
    const std::size_t gen = a.rank() + i;
    auto lift = preimage(e.g, GroupElement::basis(a, gen));
    if (!lift) throw AlgebraError("ext_classify: g is not surjective");
    auto z = preimage(e.f, a.torsion()[i] * *lift);
    if (!z) throw AlgebraError("ext_classify: kernel of g exceeds the image of f");
    cocycle.push_back(*z);
  }
  return ExtGroup(a, b).class_of(cocycle);
}

GroupHom ext_pullback(const GroupHom& u, const AbelianGroup& b) {
  const AbelianGroup& a_src = u.source();  // A'
  const AbelianGroup& a = u.target();      // A
  ExtGroup from(a, b);
  ExtGroup to(a_src, b);
  // Solve R_A W = F R_A': row rank+i of F R_A' divided by d_i.
  const IntMatrix fr = u.matrix() * a_src.relation_matrix();
  const std::size_t ka = a.torsion().size();
  const std::size_t kp = a_src.torsion().size();
  const std::size_t mb = b.num_generators();
  IntMatrix lift(kp * mb, ka * mb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t l = 0; l < kp; ++l) {
      Integer w = fr(a.rank() + i, l) / a.torsion()[i];
      for (std::size_t t = 0; t < mb; ++t) lift(l * mb + t, i * mb + t) = w;
    }
  return GroupHom(from.group(), to.group(), to.to_canonical() * lift * from.from_canonical());
}

GroupHom ext_pushforward(const AbelianGroup& a, const GroupHom& v) {
  ExtGroup from(a, v.source());
  ExtGroup to(a, v.target());
  IntMatrix blocks;
  for (std::size_t i = 0; i < a.torsion().size(); ++i) blocks = blocks.direct_sum(v.matrix());
  return GroupHom(from.group(), to.group(), to.to_canonical() * blocks * from.from_canonical());
}

// ---------------------------------------------------------------- lambda

GroupHom lambda_of_extension(const AbelianGroup& a, const AbelianGroup& b, const Extension& e) {
  const GroupHom two_torsion = torsion_inclusion(a, 2);
  const GroupHom mod_two = quotient_map(b, 2);
  const AbelianGroup& a2 = two_torsion.source();
  IntMatrix mat(mod_two.target().num_generators(), a2.num_generators());
  for (std::size_t j = 0; j < a2.num_generators(); ++j) {
    const GroupElement x = apply(two_torsion, GroupElement::basis(a2, j));
    auto y = preimage(e.g, x);
    if (!y) throw AlgebraError("lambda: g is not surjective");
    auto z = preimage(e.f, Integer(2) * *y);
    if (!z) throw AlgebraError("lambda: 2y does not lie in the image of f");
    const GroupElement w = apply(mod_two, *z);
    for (std::size_t i = 0; i < mat.rows(); ++i) mat(i, j) = w.coords()[i];
  }
  return GroupHom(a2, mod_two.target(), std::move(mat));
}

GroupHom lambda_map(const AbelianGroup& a, const AbelianGroup& b) {
  const ExtGroup ext_ab(a, b);
  const HomGroup target(n_torsion(a, 2), quotient_by_n(b, 2));
  IntMatrix mat(target.group().num_generators(), ext_ab.group().num_generators());
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    const ExtClass cls = ext_realize(a, b, GroupElement::basis(ext_ab.group(), j));
    const GroupElement coords = target.coordinates(lambda_of_extension(a, b, cls.realization));
    for (std::size_t i = 0; i < mat.rows(); ++i) mat(i, j) = coords.coords()[i];
  }
  return GroupHom(ext_ab.group(), target.group(), std::move(mat));
}

bool lambda_iso_check(const AbelianGroup& a, const AbelianGroup& b) {
  return is_isomorphism(lambda_map(a, b));
}

}  // namespace moorecalc
