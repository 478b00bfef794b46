#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moorecalc/matrix.hpp"
#include "moorecalc/smith.hpp"

namespace moorecalc {

// A mathematical precondition failed (e.g. an order was asked of an
// infinite group, or a couple violates its axioms).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k in invariant
/// factor form: every d_i >= 2 and d_i | d_{i+1}.
///
/// Generators are ordered free first, then torsion in invariant-factor order.
/// Two groups are isomorphic iff they compare equal.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Throws std::invalid_argument unless torsion is a valid divisibility chain.
  AbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  static AbelianGroup free(std::size_t rank);
  // Z for d == 0, trivial for d == 1, Z/d otherwise.
  static AbelianGroup cyclic(const Integer& d);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t num_generators() const { return rank_ + torsion_.size(); }
  // 0 for a free generator.
  Integer generator_order(std::size_t i) const;

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  // Throws AlgebraError for infinite groups.
  Integer order() const;
  // Largest invariant factor, 0 if infinite, 1 if trivial.
  Integer exponent() const;

  // Columns d_i e_{rank+i}: the relation lattice of the canonical generators.
  IntMatrix relation_matrix() const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Element of an AbelianGroup in canonical coordinates, torsion coordinates
/// reduced into [0, d).
class GroupElement {
 public:
  GroupElement(AbelianGroup group, IntVector coords);
  static GroupElement zero(const AbelianGroup& group);
  static GroupElement basis(const AbelianGroup& group, std::size_t i);

  const AbelianGroup& group() const { return group_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;
  // Additive order; 0 when infinite.
  Integer order() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a);
  friend GroupElement operator*(const Integer& n, const GroupElement& a);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  AbelianGroup group_;
  IntVector coords_;
};

/// Homomorphism source -> target given by its matrix on canonical generators
/// (target generators x source generators).
///
/// The constructor rejects matrices that do not define a homomorphism: a
/// generator of order d may only hit a Z/e coordinate with a multiple of
/// e / gcd(d, e), and torsion generators never reach free coordinates.
/// Torsion rows are stored reduced into [0, e).
class GroupHom {
 public:
  GroupHom(AbelianGroup source, AbelianGroup target, IntMatrix matrix);

  static GroupHom zero(const AbelianGroup& source, const AbelianGroup& target);
  static GroupHom identity(const AbelianGroup& a);
  static GroupHom multiplication(const AbelianGroup& a, const Integer& n);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  IntMatrix matrix_;
};

// A group together with a structural map: an inclusion for kernel and image,
// a projection for cokernel and quotients.
struct GroupWithMap {
  AbelianGroup group;
  GroupHom map;
};

struct DirectSum {
  AbelianGroup group;
  GroupHom inject_first;
  GroupHom inject_second;
  GroupHom project_first;
  GroupHom project_second;
};

/// Hom(A, B) with its generators.
///
/// Internally Hom(A, B) is the sum of one cyclic group per matrix entry; the
/// canonical form is read off from that decomposition.
class HomGroup {
 public:
  HomGroup(AbelianGroup source, AbelianGroup target);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupHom>& generators() const { return generators_; }
  // Order of each generator (0 = infinite); equals the group's generator orders.
  std::vector<Integer> generator_orders() const;

  GroupHom hom_at(const GroupElement& x) const;
  GroupElement coordinates(const GroupHom& f) const;

  // Per-entry parameterisation: entry (i, j) of a hom equals
  // entry_coordinate * entry_step(i, j), the coordinate living in Z/entry_order.
  std::size_t num_entries() const { return steps_.size(); }
  const IntVector& entry_steps() const { return steps_; }
  const IntVector& entry_orders() const { return orders_; }
  IntVector entry_coordinates(const GroupHom& f) const;
  GroupHom hom_from_entries(const IntVector& coords) const;

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  IntVector steps_;
  IntVector orders_;
  AbelianGroup group_;
  IntMatrix to_canonical_;
  IntMatrix from_canonical_;
  std::vector<GroupHom> generators_;
};

AbelianGroup from_presentation(const IntMatrix& relations_by_row);
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
DirectSum direct_sum_with_maps(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup quotient_by_n(const AbelianGroup& a, const Integer& n);
// Projection A -> A/nA.
GroupHom quotient_map(const AbelianGroup& a, const Integer& n);
AbelianGroup n_torsion(const AbelianGroup& a, const Integer& n);
// Inclusion A_n -> A of the n-torsion subgroup.
GroupHom torsion_inclusion(const AbelianGroup& a, const Integer& n);
HomGroup hom_group(const AbelianGroup& a, const AbelianGroup& b);

GroupWithMap kernel(const GroupHom& f);
GroupWithMap cokernel(const GroupHom& f);
GroupWithMap image(const GroupHom& f);

// True iff the two maps into a common group have the same image.
bool subgroup_equal(const GroupHom& inclusion_a, const GroupHom& inclusion_b);
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_isomorphism(const GroupHom& f);

// g o f
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom identity(const AbelianGroup& a);
GroupElement apply(const GroupHom& f, const GroupElement& x);
GroupHom hom_add(const GroupHom& f, const GroupHom& g);
GroupHom hom_negate(const GroupHom& f);
GroupHom hom_scale(const Integer& n, const GroupHom& f);

// Some x with f(x) == y, if y lies in the image.
std::optional<GroupElement> preimage(const GroupHom& f, const GroupElement& y);

// Given h: A -> X vanishing on nA, the induced map A/nA -> X.
// Throws std::invalid_argument if h does not kill nA.
GroupHom factor_through_quotient(const GroupHom& h, const Integer& n);

// u: A -> B induces A_n -> B_n and A/n -> B/n.
GroupHom restrict_to_torsion(const GroupHom& u, const Integer& n);
GroupHom induced_on_quotient(const GroupHom& u, const Integer& n);

}  // namespace moorecalc
