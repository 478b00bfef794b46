#include "moorecalc/exact_couples.hpp"

#include <sstream>

#include "moorecalc/presentation.hpp"

namespace moorecalc {

namespace pres = presentation;

ExactCouple::ExactCouple(AbelianGroup a_, AbelianGroup b_, GroupHom alpha_, GroupHom beta_)
    : a(std::move(a_)), b(std::move(b_)), alpha(std::move(alpha_)), beta(std::move(beta_)) {
  if (!(alpha.source() == a) || !(alpha.target() == b))
    throw std::invalid_argument("ExactCouple: alpha must map A to B");
  if (!(beta.source() == b) || !(beta.target() == a))
    throw std::invalid_argument("ExactCouple: beta must map B to A");
}

std::string to_string(CoupleDefect defect) {
  switch (defect) {
    case CoupleDefect::kKernelAlpha: return "ker(alpha) != im(2: A -> A)";
    case CoupleDefect::kKernelBeta: return "ker(beta) != im(alpha)";
    case CoupleDefect::kImageBeta: return "im(beta) != A_2";
    case CoupleDefect::kAlphaBetaNotTwo: return "alpha o beta != 2 on B";
  }
  return "unknown defect";
}

std::vector<Violation> validate(const ExactCouple& d) {
  std::vector<Violation> out;
  auto note = [&](CoupleDefect defect) { out.push_back({defect, to_string(defect)}); };
  if (!subgroup_equal(kernel(d.alpha).map, image(GroupHom::multiplication(d.a, 2)).map))
    note(CoupleDefect::kKernelAlpha);
  if (!subgroup_equal(kernel(d.beta).map, image(d.alpha).map)) note(CoupleDefect::kKernelBeta);
  if (!subgroup_equal(image(d.beta).map, torsion_inclusion(d.a, 2))) note(CoupleDefect::kImageBeta);
  if (!(compose(d.alpha, d.beta) == GroupHom::multiplication(d.b, 2))) note(CoupleDefect::kAlphaBetaNotTwo);
  return out;
}

AbelianGroup phi1(const ExactCouple& d) { return d.a; }
AbelianGroup phi2(const ExactCouple& d) { return d.b; }
GroupHom phi1(const CoupleMorphism& m) { return m.f1; }
GroupHom phi2(const CoupleMorphism& m) { return m.f2; }

bool commutes(const CoupleMorphism& m, const ExactCouple& from, const ExactCouple& to) {
  if (!(m.f1.source() == from.a) || !(m.f1.target() == to.a) || !(m.f2.source() == from.b) ||
      !(m.f2.target() == to.b))
    return false;
  return compose(m.f2, from.alpha) == compose(to.alpha, m.f1) &&
         compose(m.f1, from.beta) == compose(to.beta, m.f2);
}

CoupleMorphism compose(const CoupleMorphism& m2, const CoupleMorphism& m1) {
  return {compose(m2.f1, m1.f1), compose(m2.f2, m1.f2)};
}

CoupleMorphism identity(const ExactCouple& d) { return {identity(d.a), identity(d.b)}; }

CoupleMorphism doubling(const ExactCouple& d) {
  return {GroupHom::multiplication(d.a, 2), GroupHom::multiplication(d.b, 2)};
}

CoupleMorphism morphism_add(const CoupleMorphism& x, const CoupleMorphism& y) {
  return {hom_add(x.f1, y.f1), hom_add(x.f2, y.f2)};
}

CoupleMorphism morphism_scale(const Integer& n, const CoupleMorphism& m) {
  return {hom_scale(n, m.f1), hom_scale(n, m.f2)};
}

bool is_zero(const CoupleMorphism& m) { return m.f1.is_zero() && m.f2.is_zero(); }

bool is_isomorphism(const CoupleMorphism& m) { return is_isomorphism(m.f1) && is_isomorphism(m.f2); }

// ---------------------------------------------------------------- MorphismGroup

namespace {

IntVector concat(IntVector a, const IntVector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

MorphismGroup::MorphismGroup(ExactCouple from, ExactCouple to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (!validate(from_).empty() || !validate(to_).empty())
    throw AlgebraError("morphism_group: couple violates the exact couple axioms");

  const HomGroup h_aa(from_.a, to_.a);
  const HomGroup h_bb(from_.b, to_.b);
  const HomGroup h_ab(from_.a, to_.b);
  const HomGroup h_ba(from_.b, to_.a);
  const std::size_t n1 = h_aa.num_entries();
  const std::size_t n2 = h_bb.num_entries();

  const IntVector src_orders = concat(h_aa.entry_orders(), h_bb.entry_orders());
  const IntVector dst_orders = concat(h_ab.entry_orders(), h_ba.entry_orders());

  IntMatrix constraint(dst_orders.size(), src_orders.size());
  for (std::size_t k = 0; k < src_orders.size(); ++k) {
    IntVector unit(src_orders.size());
    unit[k] = 1;
    const GroupHom f1 = h_aa.hom_from_entries(IntVector(unit.begin(), unit.begin() + static_cast<std::ptrdiff_t>(n1)));
    const GroupHom f2 = h_bb.hom_from_entries(IntVector(unit.begin() + static_cast<std::ptrdiff_t>(n1), unit.end()));
    const GroupHom top = hom_add(compose(f2, from_.alpha), hom_negate(compose(to_.alpha, f1)));
    const GroupHom bottom = hom_add(compose(f1, from_.beta), hom_negate(compose(to_.beta, f2)));
    const IntVector image = concat(h_ab.entry_coordinates(top), h_ba.entry_coordinates(bottom));
    for (std::size_t i = 0; i < image.size(); ++i) constraint(i, k) = image[i];
  }

  pres::Subquotient ker = pres::kernel(constraint, IntMatrix::diagonal(src_orders), IntMatrix::diagonal(dst_orders));
  group_ = ker.group;
  for (std::size_t g = 0; g < group_.num_generators(); ++g) {
    const IntVector v = ker.inclusion.col(g);
    generators_.push_back(
        {h_aa.hom_from_entries(IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n1))),
         h_bb.hom_from_entries(IntVector(v.begin() + static_cast<std::ptrdiff_t>(n1),
                                         v.begin() + static_cast<std::ptrdiff_t>(n1 + n2)))});
  }
}

CoupleMorphism MorphismGroup::morphism_at(const GroupElement& x) const {
  if (!(x.group() == group_)) throw std::invalid_argument("morphism_at: element of another group");
  CoupleMorphism m{GroupHom::zero(from_.a, to_.a), GroupHom::zero(from_.b, to_.b)};
  for (std::size_t i = 0; i < generators_.size(); ++i)
    m = morphism_add(m, morphism_scale(x.coords()[i], generators_[i]));
  return m;
}

MorphismGroup morphism_group(const ExactCouple& from, const ExactCouple& to) { return MorphismGroup(from, to); }

// ---------------------------------------------------------------- file format

namespace {

constexpr const char* kHeader = "exact-couple v1";

void write_group(std::ostream& os, const char* tag, const AbelianGroup& g) {
  os << tag << " rank " << g.rank() << " torsion";
  for (const auto& d : g.torsion()) os << ' ' << d;
  os << '\n';
}

void write_matrix(std::ostream& os, const char* tag, const IntMatrix& m) {
  os << tag << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) fail(std::string("unexpected end of input, expected ") + what);
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("couple file line " + std::to_string(line_no_) + ": " + msg);
  }

  bool at_end() {
    std::string rest;
    while (std::getline(in_, rest)) {
      ++line_no_;
      if (rest.find_first_not_of(" \t\r") != std::string::npos) return false;
    }
    return true;
  }

 private:
  std::istringstream in_;
  std::size_t line_no_ = 0;
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

Integer parse_integer(LineReader& r, const std::string& tok) {
  Integer x;
  if (tok.empty() || x.set_str(tok, 10) != 0) r.fail("not an integer: '" + tok + "'");
  return x;
}

std::size_t parse_count(LineReader& r, const std::string& tok) {
  Integer x = parse_integer(r, tok);
  if (x < 0 || !x.fits_ulong_p()) r.fail("not a count: '" + tok + "'");
  return x.get_ui();
}

AbelianGroup read_group(LineReader& r, const char* tag) {
  const auto t = tokens(r.next(tag));
  if (t.size() < 4 || t[0] != tag || t[1] != "rank" || t[3] != "torsion")
    r.fail(std::string("expected '") + tag + " rank <r> torsion <d...>'");
  std::vector<Integer> torsion;
  for (std::size_t i = 4; i < t.size(); ++i) torsion.push_back(parse_integer(r, t[i]));
  try {
    return AbelianGroup(parse_count(r, t[2]), std::move(torsion));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

IntMatrix read_matrix(LineReader& r, const char* tag, std::size_t rows, std::size_t cols) {
  const auto t = tokens(r.next(tag));
  if (t.size() != 3 || t[0] != tag) r.fail(std::string("expected '") + tag + " <rows> <cols>'");
  if (parse_count(r, t[1]) != rows || parse_count(r, t[2]) != cols)
    r.fail(std::string(tag) + " has the wrong shape for the declared groups");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = tokens(r.next("matrix row"));
    if (row.size() != cols) r.fail("matrix row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_integer(r, row[j]);
  }
  return m;
}

}  // namespace

std::string write_couple(const ExactCouple& d) {
  std::ostringstream os;
  os << kHeader << '\n';
  write_group(os, "A", d.a);
  write_group(os, "B", d.b);
  write_matrix(os, "alpha", d.alpha.matrix());
  write_matrix(os, "beta", d.beta.matrix());
  return os.str();
}

ExactCouple read_couple(const std::string& text) {
  LineReader r(text);
  std::string header = r.next("header");
  while (header.empty() || header[0] == '#') header = r.next("header");
  if (header != kHeader) r.fail(std::string("expected header '") + kHeader + "'");
  AbelianGroup a = read_group(r, "A");
  AbelianGroup b = read_group(r, "B");
  IntMatrix alpha = read_matrix(r, "alpha", b.num_generators(), a.num_generators());
  IntMatrix beta = read_matrix(r, "beta", a.num_generators(), b.num_generators());
  if (!r.at_end()) r.fail("trailing content after beta");
  try {
    GroupHom al(a, b, std::move(alpha));
    GroupHom be(b, a, std::move(beta));
    return ExactCouple(a, b, std::move(al), std::move(be));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("couple file: ") + e.what());
  }
}

}  // namespace moorecalc
