#include "moorecalc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "moorecalc/moore.hpp"

namespace moorecalc::oracle {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 checked_mul(u64 a, u64 b, const char* what) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw SizeGuardError(std::string(what) + ": size overflow");
  return r;
}

u64 to_u64(const Integer& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw SizeGuardError(std::string(what) + ": value exceeds 64 bits");
  return x.get_ui();
}

// Mixed-radix enumeration of a finite group in canonical coordinates.
class FiniteGroup {
 public:
  FiniteGroup(const AbelianGroup& g, const char* what) : group_(g) {
    if (!g.is_finite()) throw AlgebraError(std::string(what) + ": group must be finite");
    for (const auto& d : g.torsion()) {
      orders_.push_back(static_cast<i64>(to_u64(d, what)));
      size_ = checked_mul(size_, static_cast<u64>(orders_.back()), what);
      if (size_ > kSizeGuard) throw SizeGuardError(std::string(what) + ": group exceeds the size guard");
    }
  }

  u64 size() const { return size_; }
  std::size_t dim() const { return orders_.size(); }
  i64 order(std::size_t i) const { return orders_[i]; }
  const AbelianGroup& group() const { return group_; }

  std::vector<i64> element(u64 idx) const {
    std::vector<i64> x(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      x[i] = static_cast<i64>(idx % static_cast<u64>(orders_[i]));
      idx /= static_cast<u64>(orders_[i]);
    }
    return x;
  }

  u64 index(const std::vector<i64>& x) const {
    u64 idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      i64 v = x[i] % orders_[i];
      if (v < 0) v += orders_[i];
      idx = idx * static_cast<u64>(orders_[i]) + static_cast<u64>(v);
    }
    return idx;
  }

  std::vector<i64> add(const std::vector<i64>& x, const std::vector<i64>& y) const {
    std::vector<i64> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders_[i];
    return z;
  }

  bool is_zero(const std::vector<i64>& x) const {
    return std::all_of(x.begin(), x.end(), [](i64 v) { return v == 0; });
  }

 private:
  AbelianGroup group_;
  std::vector<i64> orders_;
  u64 size_ = 1;
};

// Applies a hom matrix to a coordinate vector, reducing into the target.
std::vector<i64> apply_matrix(const GroupHom& f, const FiniteGroup& target, const std::vector<i64>& x) {
  const IntMatrix& m = f.matrix();
  std::vector<i64> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const i64 e = target.order(i);
    __int128 acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      acc += static_cast<__int128>(to_u64(m(i, j), "apply")) * x[j];
    y[i] = static_cast<i64>(acc % e);
  }
  return y;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 ipow(u64 p, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, p, "ipow");
  return r;
}

// Combines p-primary exponent lists into invariant factors.
AbelianGroup from_primary(std::size_t rank, std::map<u64, std::vector<int>> primary) {
  std::size_t count = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    count = std::max(count, exps.size());
  }
  // The j-th largest power of every prime goes into the j-th largest factor.
  std::vector<Integer> factors;
  for (std::size_t j = 0; j < count; ++j) {
    Integer f = 1;
    for (const auto& [p, exps] : primary)
      if (j < exps.size()) f *= Integer(static_cast<unsigned long>(ipow(p, exps[j])));
    factors.push_back(f);
  }
  std::reverse(factors.begin(), factors.end());
  return AbelianGroup(rank, std::move(factors));
}

// Structure of a finite group from the multiset of its element orders.
AbelianGroup from_element_orders(const std::vector<u64>& orders) {
  const u64 n = orders.size();
  std::map<u64, std::vector<int>> primary;
  for (const auto& [p, total] : factorize(n)) {
    // s_k = log_p #{x : p^k x = 0}; factors with exponent >= k number s_k - s_{k-1}.
    std::vector<int> at_least;
    int prev = 0;
    u64 pk = 1;
    for (int k = 1; prev < total; ++k) {
      pk = checked_mul(pk, p, "orders");
      u64 cnt = 0;
      for (u64 o : orders)
        if (pk % o == 0) ++cnt;
      int s = 0;
      for (u64 c = cnt; c > 1; c /= p) ++s;
      at_least.push_back(s - prev);
      prev = s;
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (int r = 0; r < exact; ++r) exps.push_back(static_cast<int>(k + 1));
    }
    primary[p] = exps;
  }
  return from_primary(0, std::move(primary));
}

u64 element_order(const FiniteGroup& g, const std::vector<i64>& x) {
  u64 ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const u64 d = static_cast<u64>(g.order(i));
    const u64 o = d / std::gcd(d, static_cast<u64>(x[i]));
    ord = std::lcm(ord, o);
  }
  return ord;
}

}  // namespace

AbelianGroup assemble_cyclic_sum(std::size_t rank, const std::vector<std::uint64_t>& orders) {
  std::map<u64, std::vector<int>> primary;
  for (u64 n : orders) {
    if (n == 0) throw std::invalid_argument("assemble_cyclic_sum: order 0 belongs in the rank");
    for (const auto& [p, e] : factorize(n)) primary[p].push_back(e);
  }
  return from_primary(rank, std::move(primary));
}

std::vector<GroupHom> enumerate_homs(const AbelianGroup& a, const AbelianGroup& b) {
  const FiniteGroup fa(a, "enumerate_homs");
  const FiniteGroup fb(b, "enumerate_homs");
  // Admissible images of each generator: elements killed by its order.
  std::vector<std::vector<std::vector<i64>>> admissible(fa.dim());
  u64 candidates = 1;
  for (std::size_t j = 0; j < fa.dim(); ++j) {
    for (u64 idx = 0; idx < fb.size(); ++idx) {
      auto y = fb.element(idx);
      if (static_cast<u64>(fa.order(j)) % element_order(fb, y) == 0)
        admissible[j].push_back(std::move(y));
    }
    candidates = checked_mul(candidates, admissible[j].size(), "enumerate_homs");
    if (candidates > kSizeGuard) throw SizeGuardError("enumerate_homs: more than 10^6 candidate maps");
  }
  std::vector<GroupHom> out;
  out.reserve(candidates);
  std::vector<std::size_t> pick(fa.dim(), 0);
  for (u64 c = 0; c < candidates; ++c) {
    IntMatrix m(fb.dim(), fa.dim());
    for (std::size_t j = 0; j < fa.dim(); ++j)
      for (std::size_t i = 0; i < fb.dim(); ++i) m(i, j) = static_cast<long>(admissible[j][pick[j]][i]);
    out.emplace_back(a, b, std::move(m));
    for (std::size_t j = 0; j < fa.dim(); ++j) {
      if (++pick[j] < admissible[j].size()) break;
      pick[j] = 0;
    }
  }
  return out;
}

Integer count_homs(const AbelianGroup& a, const AbelianGroup& b) {
  const FiniteGroup fa(a, "count_homs");
  const FiniteGroup fb(b, "count_homs");
  std::vector<u64> orders(fb.size());
  for (u64 idx = 0; idx < fb.size(); ++idx) orders[idx] = element_order(fb, fb.element(idx));
  Integer total = 1;
  for (std::size_t j = 0; j < fa.dim(); ++j) {
    const u64 d = static_cast<u64>(fa.order(j));
    unsigned long n = 0;
    for (u64 o : orders)
      if (d % o == 0) ++n;
    total *= n;
  }
  return total;
}

AbelianGroup cyclic_table_functor(FunctorKind kind, const AbelianGroup& a, const AbelianGroup& b) {
  // 0 encodes Z.
  auto factors = [](const AbelianGroup& g) {
    std::vector<u64> out(g.rank(), 0);
    for (const auto& d : g.torsion()) out.push_back(to_u64(d, "cyclic_table_functor"));
    return out;
  };
  std::size_t rank = 0;
  std::vector<u64> torsion;
  for (u64 d : factors(a))
    for (u64 e : factors(b)) {
      const bool zd = d == 0;
      const bool ze = e == 0;
      switch (kind) {
        case FunctorKind::kTensor:
          if (zd && ze) ++rank;
          else torsion.push_back(zd ? e : ze ? d : std::gcd(d, e));
          break;
        case FunctorKind::kTor:
          if (!zd && !ze) torsion.push_back(std::gcd(d, e));
          break;
        case FunctorKind::kExt:
          if (!zd) torsion.push_back(ze ? d : std::gcd(d, e));
          break;
        case FunctorKind::kHom:
          if (zd && ze) ++rank;
          else if (zd) torsion.push_back(e);
          else if (!ze) torsion.push_back(std::gcd(d, e));
          break;
      }
    }
  return assemble_cyclic_sum(rank, torsion);
}

bool exactness_element_check(const Extension& e) {
  const FiniteGroup fb(e.f.source(), "exactness_element_check");
  const FiniteGroup fe(e.E, "exactness_element_check");
  const FiniteGroup fa(e.g.target(), "exactness_element_check");

  std::set<u64> image_f;
  for (u64 idx = 0; idx < fb.size(); ++idx) image_f.insert(fe.index(apply_matrix(e.f, fe, fb.element(idx))));
  if (image_f.size() != fb.size()) return false;  // f not injective

  std::set<u64> image_g;
  std::set<u64> kernel_g;
  for (u64 idx = 0; idx < fe.size(); ++idx) {
    const auto y = apply_matrix(e.g, fa, fe.element(idx));
    image_g.insert(fa.index(y));
    if (fa.is_zero(y)) kernel_g.insert(idx);
  }
  if (image_g.size() != fa.size()) return false;  // g not surjective
  return image_f == kernel_g;
}

bool couple_axioms_element_check(const ExactCouple& d) {
  const FiniteGroup fa(d.a, "couple_axioms_element_check");
  const FiniteGroup fb(d.b, "couple_axioms_element_check");

  std::set<u64> doubles, kernel_alpha, two_torsion;
  std::set<u64> image_alpha;
  for (u64 idx = 0; idx < fa.size(); ++idx) {
    const auto x = fa.element(idx);
    const auto x2 = fa.add(x, x);
    doubles.insert(fa.index(x2));
    if (fa.is_zero(x2)) two_torsion.insert(idx);
    const auto y = apply_matrix(d.alpha, fb, x);
    image_alpha.insert(fb.index(y));
    if (fb.is_zero(y)) kernel_alpha.insert(idx);
  }
  if (kernel_alpha != doubles) return false;

  std::set<u64> kernel_beta, image_beta;
  for (u64 idx = 0; idx < fb.size(); ++idx) {
    const auto y = fb.element(idx);
    const auto x = apply_matrix(d.beta, fa, y);
    image_beta.insert(fa.index(x));
    if (fa.is_zero(x)) kernel_beta.insert(idx);
    if (apply_matrix(d.alpha, fb, x) != fb.add(y, y)) return false;
  }
  return kernel_beta == image_alpha && image_beta == two_torsion;
}

CoupleRelations couple_relations_check() {
  const ExactCouple ds = canonical_couple(AbelianGroup::free(1));
  const ExactCouple dp = canonical_couple(AbelianGroup::cyclic(2));
  const MorphismGroup s_to_p = morphism_group(ds, dp);
  const MorphismGroup p_to_s = morphism_group(dp, ds);

  auto elements = [](const MorphismGroup& mg) {
    std::vector<CoupleMorphism> out;
    const FiniteGroup g(mg.group(), "couple_relations_check");
    for (u64 idx = 0; idx < g.size(); ++idx) {
      IntVector v;
      for (i64 x : g.element(idx)) v.emplace_back(static_cast<long>(x));
      out.push_back(mg.morphism_at(GroupElement(mg.group(), v)));
    }
    return out;
  };

  const GroupHom projection(ds.a, dp.a, IntMatrix{{1}});
  std::optional<CoupleMorphism> theta;
  for (const auto& m : elements(s_to_p))
    if (m.f1 == projection) theta = m;
  std::optional<CoupleMorphism> lambda;
  for (const auto& m : elements(p_to_s))
    if (!is_zero(m)) lambda = m;

  CoupleRelations r;
  if (!theta || !lambda) return r;
  r.two_theta_zero = is_zero(morphism_scale(2, *theta));
  r.two_lambda_zero = is_zero(morphism_scale(2, *lambda));
  r.lambda_theta_zero = is_zero(compose(*lambda, *theta));
  r.theta_lambda_doubling = compose(*theta, *lambda) == doubling(dp);
  return r;
}

AbelianGroup pushout_element_oracle(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.source())) throw std::invalid_argument("pushout_element_oracle: different sources");
  const FiniteGroup fc(f.source(), "pushout_element_oracle");
  const FiniteGroup fx(f.target(), "pushout_element_oracle");
  const FiniteGroup fy(g.target(), "pushout_element_oracle");
  std::vector<i64> sum_orders;
  for (std::size_t i = 0; i < fx.dim(); ++i) sum_orders.push_back(fx.order(i));
  for (std::size_t i = 0; i < fy.dim(); ++i) sum_orders.push_back(fy.order(i));
  const u64 total = checked_mul(fx.size(), fy.size(), "pushout_element_oracle");
  if (total > kSizeGuard) throw SizeGuardError("pushout_element_oracle: X + Y exceeds the size guard");

  auto split = [&](u64 idx) {
    std::vector<i64> v = fx.element(idx % fx.size());
    const auto w = fy.element(idx / fx.size());
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };
  auto join = [&](const std::vector<i64>& v) {
    std::vector<i64> x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(fx.dim()));
    std::vector<i64> y(v.begin() + static_cast<std::ptrdiff_t>(fx.dim()), v.end());
    return fy.index(y) * fx.size() + fx.index(x);
  };
  auto add = [&](const std::vector<i64>& u, const std::vector<i64>& v) {
    std::vector<i64> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = (u[i] + v[i]) % sum_orders[i];
    return w;
  };

  std::set<u64> relations;
  for (u64 idx = 0; idx < fc.size(); ++idx) {
    const auto c = fc.element(idx);
    std::vector<i64> v = apply_matrix(f, fx, c);
    const auto gy = apply_matrix(g, fy, c);
    for (std::size_t i = 0; i < gy.size(); ++i) v.push_back((fy.order(i) - gy[i]) % fy.order(i));
    relations.insert(join(v));
  }
  if (checked_mul(total, relations.size(), "pushout_element_oracle") > 50 * kSizeGuard)
    throw SizeGuardError("pushout_element_oracle: coset enumeration too large");
  std::vector<std::vector<i64>> rel_elems;
  for (u64 r : relations) rel_elems.push_back(split(r));

  // One order per coset, taken at the coset's smallest index.
  std::vector<u64> orders;
  for (u64 idx = 0; idx < total; ++idx) {
    const auto x = split(idx);
    bool smallest = true;
    for (const auto& h : rel_elems)
      if (join(add(x, h)) < idx) {
        smallest = false;
        break;
      }
    if (!smallest) continue;
    u64 k = 1;
    std::vector<i64> acc = x;
    while (!relations.count(join(acc))) {
      acc = add(acc, x);
      ++k;
    }
    orders.push_back(k);
  }
  return from_element_orders(orders);
}

AbelianGroup closed_form_prime(const AbelianGroup& a) {
  std::vector<u64> orders(a.rank(), 2);
  for (const auto& d : a.torsion()) {
    if (mpz_odd_p(d.get_mpz_t())) continue;
    if (mpz_divisible_ui_p(d.get_mpz_t(), 4)) {
      orders.push_back(2);
      orders.push_back(2);
    } else {
      orders.push_back(4);
    }
  }
  return assemble_cyclic_sum(0, orders);
}

}  // namespace moorecalc::oracle
