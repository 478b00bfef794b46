#include "moorecalc/smith.hpp"

#include <algorithm>

namespace moorecalc {

namespace {

// Row and column operations on D are mirrored on U, U_inv (rows) and
// V, V_inv (columns) so that D = U M V holds after every step.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : s_{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
           IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())} {}

  SmithForm run() {
    const std::size_t n = std::min(s_.D.rows(), s_.D.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_cross(t);
        auto bad = find_non_multiple(t);
        if (!bad) break;
        // Pull the offending row in; the next pass shrinks the pivot.
        add_rows(t, *bad, 1);
      }
      if (s_.D(t, t) < 0) negate_row(t);
    }
    return std::move(s_);
  }

 private:
  SmithForm s_;

  void swap_rows(std::size_t a, std::size_t b) {
    s_.D.swap_rows(a, b);
    s_.U.swap_rows(a, b);
    s_.U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s_.D.swap_cols(a, b);
    s_.V.swap_cols(a, b);
    s_.V_inv.swap_rows(a, b);
  }
  // row[dst] += c * row[src]
  void add_rows(std::size_t dst, std::size_t src, const Integer& c) {
    s_.D.add_row_multiple(dst, src, c);
    s_.U.add_row_multiple(dst, src, c);
    s_.U_inv.add_col_multiple(src, dst, -c);
  }
  // col[dst] += c * col[src]
  void add_cols(std::size_t dst, std::size_t src, const Integer& c) {
    s_.D.add_col_multiple(dst, src, c);
    s_.V.add_col_multiple(dst, src, c);
    s_.V_inv.add_row_multiple(src, dst, -c);
  }
  void negate_row(std::size_t r) {
    s_.D.negate_row(r);
    s_.U.negate_row(r);
    s_.U_inv.negate_col(r);
  }

  // Moves the smallest non-zero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    const IntMatrix& d = s_.D;
    std::size_t br = 0, bc = 0;
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < d.rows(); ++r)
      for (std::size_t c = t; c < d.cols(); ++c) {
        const Integer& x = d(r, c);
        if (x == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = abs(x);
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // row_i, row_j <- a row_i + b row_j, c row_i + d row_j
  static void mix_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                       const Integer& c, const Integer& d) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Integer x = m(i, k), y = m(j, k);
      m(i, k) = a * x + b * y;
      m(j, k) = c * x + d * y;
    }
  }
  static void mix_cols(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                       const Integer& c, const Integer& d) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
      const Integer x = m(k, i), y = m(k, j);
      m(k, i) = a * x + b * y;
      m(k, j) = c * x + d * y;
    }
  }

  // Replaces the pivot by gcd(pivot, D(r, t)) and zeroes D(r, t).
  void gcd_rows(std::size_t t, std::size_t r) {
    const Integer a = s_.D(t, t), b = s_.D(r, t);
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Integer ag = a / g, bg = b / g;
    mix_rows(s_.D, t, r, x, y, -bg, ag);
    mix_rows(s_.U, t, r, x, y, -bg, ag);
    mix_cols(s_.U_inv, t, r, ag, bg, -y, x);
  }
  void gcd_cols(std::size_t t, std::size_t c) {
    const Integer a = s_.D(t, t), b = s_.D(t, c);
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Integer ag = a / g, bg = b / g;
    mix_cols(s_.D, t, c, x, y, -bg, ag);
    mix_cols(s_.V, t, c, x, y, -bg, ag);
    mix_rows(s_.V_inv, t, c, ag, bg, -y, x);
  }

  // Clears row t and column t off the pivot; each gcd step can only shrink
  // the pivot, so the loop ends.
  void clear_cross(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < s_.D.rows(); ++r) {
        if (s_.D(r, t) == 0) continue;
        if (mpz_divisible_p(s_.D(r, t).get_mpz_t(), s_.D(t, t).get_mpz_t()))
          add_rows(r, t, -Integer(s_.D(r, t) / s_.D(t, t)));
        else
          gcd_rows(t, r);
      }
      for (std::size_t c = t + 1; c < s_.D.cols(); ++c) {
        if (s_.D(t, c) == 0) continue;
        if (mpz_divisible_p(s_.D(t, c).get_mpz_t(), s_.D(t, t).get_mpz_t())) {
          add_cols(c, t, -Integer(s_.D(t, c) / s_.D(t, t)));
        } else {
          gcd_cols(t, c);
          dirty = true;
        }
      }
      if (!dirty) return;
    }
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    const Integer& p = s_.D(t, t);
    for (std::size_t r = t + 1; r < s_.D.rows(); ++r)
      for (std::size_t c = t + 1; c < s_.D.cols(); ++c)
        if (!mpz_divisible_p(s_.D(r, c).get_mpz_t(), p.get_mpz_t())) return r;
    return std::nullopt;
  }
};

}  // namespace

std::size_t SmithForm::rank() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  std::size_t r = 0;
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

Integer SmithForm::diagonal(std::size_t i) const {
  if (i < D.rows() && i < D.cols()) return D(i, i);
  return 0;
}

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank(); j < m.cols(); ++j) idx.push_back(j);
  return s.V.select_cols(idx);
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& gens, const IntVector& v) {
  // gens = U_inv D V_inv, so gens c = v  <=>  D (V_inv c) = U v.
  SmithForm s = smith_normal_form(gens);
  IntVector w = s.U * v;
  const std::size_t r = s.rank();
  IntVector y(gens.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = w[i] / s.D(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

}  // namespace moorecalc
