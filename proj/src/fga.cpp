#include "moorecalc/fga.hpp"

#include <sstream>

#include "moorecalc/presentation.hpp"

namespace moorecalc {

namespace pres = presentation;

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("AbelianGroup: invariant factor below 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw std::invalid_argument("AbelianGroup: invariant factors must form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(rank, {}); }

AbelianGroup AbelianGroup::cyclic(const Integer& d) {
  if (d < 0) throw std::invalid_argument("AbelianGroup::cyclic: negative order");
  if (d == 0) return free(1);
  if (d == 1) return {};
  return AbelianGroup(0, {d});
}

Integer AbelianGroup::generator_order(std::size_t i) const {
  if (i < rank_) return 0;
  return torsion_.at(i - rank_);
}

Integer AbelianGroup::order() const {
  if (rank_ != 0) throw AlgebraError("order of an infinite group");
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

Integer AbelianGroup::exponent() const {
  if (rank_ != 0) return 0;
  return torsion_.empty() ? Integer(1) : torsion_.back();
}

IntMatrix AbelianGroup::relation_matrix() const {
  IntMatrix m(num_generators(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m(rank_ + i, i) = torsion_[i];
  return m;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ == 1) {
    os << "Z";
    first = false;
  } else if (rank_ > 1) {
    os << "Z^" << rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- GroupElement

GroupElement::GroupElement(AbelianGroup group, IntVector coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.num_generators())
    throw std::invalid_argument("GroupElement: coordinate count mismatch");
  for (std::size_t i = group_.rank(); i < coords_.size(); ++i)
    coords_[i] = mod_floor(coords_[i], group_.generator_order(i));
}

GroupElement GroupElement::zero(const AbelianGroup& group) {
  return GroupElement(group, IntVector(group.num_generators()));
}

GroupElement GroupElement::basis(const AbelianGroup& group, std::size_t i) {
  IntVector v(group.num_generators());
  v.at(i) = 1;
  return GroupElement(group, std::move(v));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Integer GroupElement::order() const {
  for (std::size_t i = 0; i < group_.rank(); ++i)
    if (coords_[i] != 0) return 0;
  Integer ord = 1;
  for (std::size_t i = group_.rank(); i < coords_.size(); ++i) {
    const Integer d = group_.generator_order(i);
    Integer o = d / gcd(d, coords_[i]);
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

namespace {

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("GroupElement: different groups");
}

}  // namespace

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  IntVector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords_[i];
  return GroupElement(a.group_, std::move(v));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  IntVector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords_[i];
  return GroupElement(a.group_, std::move(v));
}

GroupElement operator-(const GroupElement& a) {
  IntVector v = a.coords_;
  for (auto& x : v) x = -x;
  return GroupElement(a.group_, std::move(v));
}

GroupElement operator*(const Integer& n, const GroupElement& a) {
  IntVector v = a.coords_;
  for (auto& x : v) x *= n;
  return GroupElement(a.group_, std::move(v));
}

// ---------------------------------------------------------------- GroupHom

GroupHom::GroupHom(AbelianGroup source, AbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators())
    throw std::invalid_argument("GroupHom: matrix shape does not match groups");
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    const Integer d = source_.generator_order(j);
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      Integer& m = matrix_(i, j);
      const Integer e = target_.generator_order(i);
      if (e == 0) {
        if (d != 0 && m != 0)
          throw std::invalid_argument("GroupHom: torsion generator mapped into a free coordinate");
        continue;
      }
      m = mod_floor(m, e);
      if (d != 0) {
        const Integer step = e / gcd(d, e);
        if (!mpz_divisible_p(m.get_mpz_t(), step.get_mpz_t()))
          throw std::invalid_argument("GroupHom: entry violates the order congruence");
      }
    }
  }
}

GroupHom GroupHom::zero(const AbelianGroup& source, const AbelianGroup& target) {
  return GroupHom(source, target, IntMatrix(target.num_generators(), source.num_generators()));
}

GroupHom GroupHom::identity(const AbelianGroup& a) {
  return GroupHom(a, a, IntMatrix::identity(a.num_generators()));
}

GroupHom GroupHom::multiplication(const AbelianGroup& a, const Integer& n) {
  return GroupHom(a, a, n * IntMatrix::identity(a.num_generators()));
}

// ---------------------------------------------------------------- HomGroup

HomGroup::HomGroup(AbelianGroup source, AbelianGroup target)
    : source_(std::move(source)), target_(std::move(target)) {
  const std::size_t m = target_.num_generators();
  const std::size_t n = source_.num_generators();
  for (std::size_t i = 0; i < m; ++i) {
    const Integer e = target_.generator_order(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Integer d = source_.generator_order(j);
      if (e == 0) {
        // Hom(Z, Z) = Z, Hom(Z/d, Z) = 0.
        steps_.emplace_back(d == 0 ? 1 : 0);
        orders_.emplace_back(d == 0 ? 0 : 1);
      } else if (d == 0) {
        steps_.emplace_back(1);
        orders_.push_back(e);
      } else {
        const Integer g = gcd(d, e);
        steps_.push_back(e / g);
        orders_.push_back(g);
      }
    }
  }
  pres::Canonical c = pres::canonicalize(IntMatrix::diagonal(orders_));
  group_ = c.group;
  to_canonical_ = std::move(c.to_canonical);
  from_canonical_ = std::move(c.from_canonical);
  for (std::size_t k = 0; k < group_.num_generators(); ++k)
    generators_.push_back(hom_from_entries(from_canonical_.col(k)));
}

std::vector<Integer> HomGroup::generator_orders() const {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < group_.num_generators(); ++k) out.push_back(group_.generator_order(k));
  return out;
}

GroupHom HomGroup::hom_from_entries(const IntVector& coords) const {
  if (coords.size() != steps_.size()) throw std::invalid_argument("HomGroup: wrong coordinate count");
  const std::size_t n = source_.num_generators();
  IntMatrix mat(target_.num_generators(), n);
  for (std::size_t k = 0; k < coords.size(); ++k) mat(k / n, k % n) = coords[k] * steps_[k];
  return GroupHom(source_, target_, std::move(mat));
}

IntVector HomGroup::entry_coordinates(const GroupHom& f) const {
  if (!(f.source() == source_) || !(f.target() == target_))
    throw std::invalid_argument("HomGroup: hom has the wrong source or target");
  const std::size_t n = source_.num_generators();
  IntVector coords(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k] == 0) continue;
    Integer c = f.matrix()(k / n, k % n) / steps_[k];
    if (orders_[k] != 0) c = mod_floor(c, orders_[k]);
    coords[k] = c;
  }
  return coords;
}

GroupHom HomGroup::hom_at(const GroupElement& x) const {
  if (!(x.group() == group_)) throw std::invalid_argument("HomGroup::hom_at: element of another group");
  return hom_from_entries(from_canonical_ * x.coords());
}

GroupElement HomGroup::coordinates(const GroupHom& f) const {
  return GroupElement(group_, to_canonical_ * entry_coordinates(f));
}

// ---------------------------------------------------------------- operations

AbelianGroup from_presentation(const IntMatrix& relations_by_row) {
  return pres::canonicalize(relations_by_row.transpose()).group;
}

DirectSum direct_sum_with_maps(const AbelianGroup& a, const AbelianGroup& b) {
  const std::size_t na = a.num_generators();
  const std::size_t nb = b.num_generators();
  pres::Canonical c = pres::canonicalize(pres::relations_of_sum({a, b}));
  const std::size_t ns = c.group.num_generators();
  return DirectSum{c.group,
                   GroupHom(a, c.group, c.to_canonical.block(0, 0, ns, na)),
                   GroupHom(b, c.group, c.to_canonical.block(0, na, ns, nb)),
                   GroupHom(c.group, a, c.from_canonical.block(0, 0, na, ns)),
                   GroupHom(c.group, b, c.from_canonical.block(na, 0, nb, ns))};
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  return pres::canonicalize(pres::relations_of_sum({a, b})).group;
}

GroupHom quotient_map(const AbelianGroup& a, const Integer& n) {
  if (n < 1) throw std::invalid_argument("quotient_by_n: n must be positive");
  return cokernel(GroupHom::multiplication(a, n)).map;
}

AbelianGroup quotient_by_n(const AbelianGroup& a, const Integer& n) { return quotient_map(a, n).target(); }

GroupHom torsion_inclusion(const AbelianGroup& a, const Integer& n) {
  if (n < 1) throw std::invalid_argument("n_torsion: n must be positive");
  return kernel(GroupHom::multiplication(a, n)).map;
}

AbelianGroup n_torsion(const AbelianGroup& a, const Integer& n) { return torsion_inclusion(a, n).source(); }

HomGroup hom_group(const AbelianGroup& a, const AbelianGroup& b) { return HomGroup(a, b); }

GroupWithMap kernel(const GroupHom& f) {
  pres::Subquotient s =
      pres::kernel(f.matrix(), f.source().relation_matrix(), f.target().relation_matrix());
  return {s.group, GroupHom(s.group, f.source(), std::move(s.inclusion))};
}

GroupWithMap image(const GroupHom& f) {
  pres::Subquotient s = pres::subquotient(f.matrix(), f.target().relation_matrix());
  return {s.group, GroupHom(s.group, f.target(), std::move(s.inclusion))};
}

GroupWithMap cokernel(const GroupHom& f) {
  pres::Canonical c = pres::cokernel(f.matrix(), f.target().relation_matrix());
  return {c.group, GroupHom(f.target(), c.group, std::move(c.to_canonical))};
}

namespace {

bool lattice_contains_columns(const IntMatrix& lattice, const IntMatrix& vectors) {
  for (std::size_t j = 0; j < vectors.cols(); ++j)
    if (!solve_in_lattice(lattice, vectors.col(j))) return false;
  return true;
}

}  // namespace

bool subgroup_equal(const GroupHom& inclusion_a, const GroupHom& inclusion_b) {
  if (!(inclusion_a.target() == inclusion_b.target()))
    throw std::invalid_argument("subgroup_equal: maps into different groups");
  const IntMatrix rel = inclusion_a.target().relation_matrix();
  const IntMatrix la = inclusion_a.matrix().hstack(rel);
  const IntMatrix lb = inclusion_b.matrix().hstack(rel);
  return lattice_contains_columns(la, inclusion_b.matrix()) &&
         lattice_contains_columns(lb, inclusion_a.matrix());
}

bool is_injective(const GroupHom& f) { return kernel(f).group.is_trivial(); }
bool is_surjective(const GroupHom& f) { return cokernel(f).group.is_trivial(); }
bool is_isomorphism(const GroupHom& f) { return is_injective(f) && is_surjective(f); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: target/source mismatch");
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupHom identity(const AbelianGroup& a) { return GroupHom::identity(a); }

GroupElement apply(const GroupHom& f, const GroupElement& x) {
  if (!(x.group() == f.source())) throw std::invalid_argument("apply: element not in the source");
  return GroupElement(f.target(), f.matrix() * x.coords());
}

GroupHom hom_add(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw std::invalid_argument("hom_add: maps between different groups");
  return GroupHom(f.source(), f.target(), f.matrix() + g.matrix());
}

GroupHom hom_negate(const GroupHom& f) { return GroupHom(f.source(), f.target(), -f.matrix()); }

GroupHom hom_scale(const Integer& n, const GroupHom& f) {
  return GroupHom(f.source(), f.target(), n * f.matrix());
}

std::optional<GroupElement> preimage(const GroupHom& f, const GroupElement& y) {
  if (!(y.group() == f.target())) throw std::invalid_argument("preimage: element not in the target");
  auto x = pres::solve(f.matrix(), f.target().relation_matrix(), y.coords());
  if (!x) return std::nullopt;
  return GroupElement(f.source(), std::move(*x));
}

GroupHom factor_through_quotient(const GroupHom& h, const Integer& n) {
  if (!compose(h, GroupHom::multiplication(h.source(), n)).is_zero())
    throw std::invalid_argument("factor_through_quotient: map does not vanish on nA");
  const AbelianGroup& a = h.source();
  pres::Canonical q = pres::cokernel(n * IntMatrix::identity(a.num_generators()), a.relation_matrix());
  return GroupHom(q.group, h.target(), h.matrix() * q.from_canonical);
}

GroupHom restrict_to_torsion(const GroupHom& u, const Integer& n) {
  const GroupHom src = torsion_inclusion(u.source(), n);
  const GroupHom dst = torsion_inclusion(u.target(), n);
  const GroupHom through = compose(u, src);
  IntMatrix mat(dst.source().num_generators(), src.source().num_generators());
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    auto x = preimage(dst, apply(through, GroupElement::basis(src.source(), j)));
    if (!x) throw AlgebraError("restrict_to_torsion: image left the torsion subgroup");
    for (std::size_t i = 0; i < mat.rows(); ++i) mat(i, j) = x->coords()[i];
  }
  return GroupHom(src.source(), dst.source(), std::move(mat));
}

GroupHom induced_on_quotient(const GroupHom& u, const Integer& n) {
  return factor_through_quotient(compose(quotient_map(u.target(), n), u), n);
}

}  // namespace moorecalc
