#include "moorecalc/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "moorecalc/battery.hpp"
#include "moorecalc/exact_couples.hpp"
#include "moorecalc/moore.hpp"

namespace moorecalc::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned long kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  AbelianGroup parse() {
    skip();
    if (peek() == '0') {
      ++pos_;
      skip();
      if (pos_ != s_.size()) fail("unexpected input after '0'");
      return {};
    }
    term();
    skip();
    while (pos_ < s_.size()) {
      expect('+', "'+'");
      term();
      skip();
    }
    IntVector orders(rank_, Integer(0));
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    if (orders.empty()) return {};
    return from_presentation(IntMatrix::diagonal(orders));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  Integer number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Integer modulus() {
    const std::size_t at = (skip(), pos_);
    Integer n = number();
    if (n < 2) {
      pos_ = at;
      fail("modulus must be at least 2");
    }
    return n;
  }

  unsigned long exponent() {
    const std::size_t at = (skip(), pos_);
    const Integer k = number();
    if (k < 1) {
      pos_ = at;
      fail("exponent must be at least 1");
    }
    if (k > kMaxExponent) {
      pos_ = at;
      fail("exponent larger than " + std::to_string(kMaxExponent));
    }
    return k.get_ui();
  }

  void add_cyclic(const Integer& n, unsigned long k) { torsion_.insert(torsion_.end(), k, n); }

  void term() {
    if (accept('(')) {
      expect('Z', "'Z'");
      expect('/', "'/'");
      const Integer n = modulus();
      expect(')', "')'");
      expect('^', "'^'");
      add_cyclic(n, exponent());
      return;
    }
    expect('Z', "'Z' or '('");
    if (accept('/')) {
      const Integer n = modulus();
      add_cyclic(n, accept('^') ? exponent() : 1);
      return;
    }
    rank_ += accept('^') ? exponent() : 1;
  }
};

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(integer_json(d));
  return Json{{"rank", g.rank()}, {"torsion", torsion}};
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string order_text(const Integer& order) { return order == 0 ? "infinite" : order.get_str(); }

std::string moore_name(const AbelianGroup& g, bool unicode) { return "M(" + format_group(g, unicode) + ")"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("column " + std::to_string(position + 1) + ": " + message),
      position_(position),
      reason_(message) {}

AbelianGroup parse_group(std::string_view text) { return Parser(text).parse(); }

std::string format_group(const AbelianGroup& g, bool unicode) {
  if (!unicode) return g.to_string();
  if (g.is_trivial()) return "0";
  std::string out;
  auto add = [&](const std::string& part) { out += (out.empty() ? "" : " ⊕ ") + part; };
  if (g.rank() == 1) add("ℤ");
  if (g.rank() > 1) add("ℤ^" + std::to_string(g.rank()));
  for (const auto& d : g.torsion()) add("ℤ/" + d.get_str());
  return out;
}

std::string render_stems(const AbelianGroup& a, const StemsOptions& options) {
  const StemTable table = stem_table(a);
  if (options.json) {
    Json rows = Json::array();
    for (int q = 0; q <= kMaxStem; ++q) {
      Json row;
      row["q"] = q;
      if (options.degree) row["i"] = *options.degree + q;
      row["rank"] = table[q].rank();
      row["torsion"] = group_json(table[q])["torsion"];
      rows.push_back(row);
    }
    return dump(rows);
  }
  std::ostringstream os;
  os << "stable homotopy of " << moore_name(a, options.unicode);
  if (options.degree) os << " with homology in degree " << *options.degree;
  os << '\n';
  const int iw = options.degree ? static_cast<int>(std::to_string(*options.degree + kMaxStem).size()) + 1 : 0;
  os << std::setw(2) << "q";
  if (options.degree) os << std::setw(iw + 1) << "i";
  os << "  group\n";
  for (int q = 0; q <= kMaxStem; ++q) {
    os << std::setw(2) << q;
    if (options.degree) os << std::setw(iw + 1) << *options.degree + q;
    os << "  " << format_group(table[q], options.unicode) << '\n';
  }
  return os.str();
}

std::string render_maps(const AbelianGroup& a, const AbelianGroup& b, bool json, bool unicode) {
  const MorphismGroup classes = homotopy_classes(a, b);
  const AbelianGroup& g = classes.group();
  if (json) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < classes.generators().size(); ++i) {
      const CoupleMorphism& m = classes.generators()[i];
      gens.push_back(Json{{"order", integer_json(g.generator_order(i))},
                          {"f1", matrix_json(m.f1.matrix())},
                          {"f2", matrix_json(m.f2.matrix())}});
    }
    return dump(Json{{"source", format_group(a)},
                     {"target", format_group(b)},
                     {"group", format_group(g)},
                     {"rank", g.rank()},
                     {"torsion", group_json(g)["torsion"]},
                     {"generators", gens}});
  }
  std::ostringstream os;
  os << "[" << moore_name(a, unicode) << ", " << moore_name(b, unicode) << "] = " << format_group(g, unicode) << '\n';
  for (std::size_t i = 0; i < classes.generators().size(); ++i) {
    const CoupleMorphism& m = classes.generators()[i];
    os << "generator " << i + 1 << ", order " << order_text(g.generator_order(i)) << '\n';
    os << "  f1 = " << m.f1.matrix().to_string() << '\n';
    os << "  f2 = " << m.f2.matrix().to_string() << '\n';
  }
  return os.str();
}

std::string render_couple(const AbelianGroup& a, bool json) {
  const ExactCouple d = canonical_couple(a);
  if (!json) return write_couple(d);
  return dump(Json{{"A", group_json(d.a)},
                   {"B", group_json(d.b)},
                   {"alpha", matrix_json(d.alpha.matrix())},
                   {"beta", matrix_json(d.beta.matrix())}});
}

Rendered render_normalize(const std::string& file_text, bool json, bool unicode) {
  const ExactCouple d = read_couple(file_text);
  const auto violations = validate(d);
  if (!violations.empty()) {
    if (json) {
      Json list = Json::array();
      for (const auto& v : violations) list.push_back(Json{{"defect", to_string(v.defect)}, {"message", v.message}});
      return {kExitMath, dump(Json{{"valid", false}, {"violations", list}})};
    }
    std::ostringstream os;
    os << "not an exact couple:\n";
    for (const auto& v : violations) os << "  " << to_string(v.defect) << ": " << v.message << '\n';
    return {kExitMath, os.str()};
  }
  const Normalization n = normalize(d);
  if (json) {
    return {kExitOk, dump(Json{{"valid", true},
                               {"A", group_json(d.a)},
                               {"B", group_json(d.b)},
                               {"canonical", group_json(n.canonical.b)},
                               {"identity", n.iso == identity(d)},
                               {"f1", matrix_json(n.iso.f1.matrix())},
                               {"f2", matrix_json(n.iso.f2.matrix())}})};
  }
  std::ostringstream os;
  os << "exact couple with A = " << format_group(d.a, unicode) << ", B = " << format_group(d.b, unicode) << '\n';
  os << (n.iso == identity(d) ? "already canonical; isomorphism is the identity\n"
                              : "isomorphism to the canonical couple:\n");
  os << "  f1 = " << n.iso.f1.matrix().to_string() << '\n';
  os << "  f2 = " << n.iso.f2.matrix().to_string() << '\n';
  return {kExitOk, os.str()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable homotopy of Moore spaces M(A, n) through exact couples", "moorecalc"};
  app.require_subcommand(1);

  bool json = false, unicode = false;
  std::optional<long> degree;
  std::string group_a, group_b, couple_file, battery_size = "small";

  auto* stems = app.add_subcommand("stems", "Stable stems pi_q^S(M(A, n)) for q = 0..7");
  stems->add_option("group", group_a, "Homology group A, e.g. \"Z/2 + Z\"")->required();
  stems->add_option("--degree", degree, "Homology degree n; adds the column i = n + q");
  stems->add_flag("--json", json, "JSON output");
  stems->add_flag("--unicode", unicode, "Unicode group notation");

  auto* maps = app.add_subcommand("maps", "Homotopy classes [M(A, n), M(B, n)] with generators");
  maps->add_option("source", group_a, "Group A")->required();
  maps->add_option("target", group_b, "Group B")->required();
  maps->add_flag("--json", json, "JSON output");
  maps->add_flag("--unicode", unicode, "Unicode group notation");

  auto* couple = app.add_subcommand("couple", "Canonical exact couple of M(A, n) in the couple file format");
  couple->add_option("group", group_a, "Group A")->required();
  couple->add_flag("--json", json, "JSON output");

  auto* norm = app.add_subcommand("normalize", "Validate a couple file and compare it with the canonical couple");
  norm->add_option("file", couple_file, "Couple file, or - for standard input")->required();
  norm->add_flag("--json", json, "JSON output");
  norm->add_flag("--unicode", unicode, "Unicode group notation");

  auto* check = app.add_subcommand("check", "Run the verification battery");
  check->add_option("--battery", battery_size, "small or full")->check(CLI::IsMember({"small", "full"}));
  check->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto parse_arg = [&](const std::string& text) {
    try {
      return parse_group(text);
    } catch (const ParseError& e) {
      std::ostringstream msg;
      msg << "cannot parse group at column " << e.position() + 1 << ": " << e.reason() << "\n  " << text << "\n  "
          << std::string(e.position(), ' ') << "^";
      throw std::invalid_argument(msg.str());
    }
  };

  try {
    if (*stems) {
      out << render_stems(parse_arg(group_a), StemsOptions{json, unicode, degree});
    } else if (*maps) {
      out << render_maps(parse_arg(group_a), parse_arg(group_b), json, unicode);
    } else if (*couple) {
      out << render_couple(parse_arg(group_a), json);
    } else if (*norm) {
      std::string text;
      if (couple_file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(couple_file);
        if (!in) {
          err << "error: cannot open " << couple_file << '\n';
          return kExitUsage;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      const Rendered r = render_normalize(text, json, unicode);
      out << r.text;
      return r.exit_code;
    } else if (*check) {
      const auto results =
          battery::run_battery(battery_size == "full" ? battery::Size::kFull : battery::Size::kSmall);
      bool all = true;
      Json rows = Json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        if (json) {
          rows.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
          out << (r.passed ? "PASS  " : "FAIL  ") << r.name << " (" << std::fixed << std::setprecision(2)
              << r.seconds << " s): " << r.detail << '\n';
        }
      }
      if (json) out << dump(rows);
      return all ? kExitOk : kExitMath;
    }
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace moorecalc::cli
