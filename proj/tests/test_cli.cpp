#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "moorecalc/cli.hpp"
#include "moorecalc/exact_couples.hpp"
#include "moorecalc/moore.hpp"

using namespace moorecalc;
using namespace moorecalc::cli;
using test::C;
using test::finite;
using test::Z;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "moorecalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_position(std::string_view text) {
  try {
    parse_group(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parsing group expressions") {
  CHECK(parse_group("Z") == Z());
  CHECK(parse_group("Z/2") == C(2));
  const AbelianGroup g = parse_group("Z^2 + Z/12 + Z/8");
  CHECK(g.rank() == 2);
  CHECK(g.torsion() == std::vector<Integer>{4, 24});
  CHECK(parse_group("  Z / 2 ^ 3+Z ") == AbelianGroup(1, {2, 2, 2}));
  CHECK(parse_group("(Z/4)^2") == finite({4, 4}));
  CHECK(parse_group("0") == AbelianGroup());
  CHECK(parse_group("Z/2 + Z/3") == C(6));
}

TEST_CASE("parse errors carry a position") {
  CHECK(error_position("Z/2^0") == 4);
  CHECK(error_position("Z/1") == 2);
  CHECK(error_position("Z/0") == 2);
  CHECK(error_position("") == 0);
  CHECK(error_position("Z +") == 3);
  CHECK(error_position("Q") == 0);
  CHECK(error_position("Z/2 Z") == 4);
  CHECK(error_position("(Z/2)") == 5);
  CHECK(error_position("0 + Z") == 2);
  CHECK(error_position("Z^-1") == 2);
}

TEST_CASE("printing and parsing round trip") {
  std::mt19937_64 rng(12);
  for (int s = 0; s < 100; ++s) {
    const std::size_t rank = rng() % 3;
    std::vector<Integer> chain;
    long d = 2 + static_cast<long>(rng() % 30);
    for (std::size_t i = 0, k = rng() % 4; i < k; ++i) {
      chain.emplace_back(d);
      d *= 1 + static_cast<long>(rng() % 3);
    }
    const AbelianGroup g(rank, chain);
    CHECK(parse_group(format_group(g)) == g);
    CHECK(format_group(parse_group(format_group(g))) == format_group(g));
  }
}

TEST_CASE("unicode output") {
  CHECK(format_group(AbelianGroup(2, {2}), true) == "ℤ^2 ⊕ ℤ/2");
  CHECK(format_group(AbelianGroup(), true) == "0");
}

TEST_CASE("stems command") {
  const Outcome sphere = invoke({"stems", "Z"});
  CHECK(sphere.code == kExitOk);
  CHECK(sphere.out.find(" 3  Z/24\n") != std::string::npos);
  CHECK(sphere.out.find(" 7  Z/240\n") != std::string::npos);

  const Outcome p = invoke({"stems", "Z/2", "--json", "--degree", "4"});
  REQUIRE(p.code == kExitOk);
  const auto rows = nlohmann::json::parse(p.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[2]["q"] == 2);
  CHECK(rows[2]["i"] == 6);
  CHECK(rows[2]["rank"] == 0);
  CHECK(rows[2]["torsion"] == nlohmann::json::array({4}));

  const Outcome bad = invoke({"stems", "Z/2^0"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("column 5") != std::string::npos);
}

TEST_CASE("maps command") {
  CHECK(invoke({"maps", "Z/2", "Z/2"}).out.rfind("[M(Z/2), M(Z/2)] = Z/4\n", 0) == 0);
  CHECK(invoke({"maps", "Z", "Z/24"}).out.rfind("[M(Z), M(Z/24)] = Z/24\n", 0) == 0);
  CHECK(invoke({"maps", "Z/2", "Z"}).out.rfind("[M(Z/2), M(Z)] = Z/2\n", 0) == 0);
  const auto j = nlohmann::json::parse(invoke({"maps", "Z/2", "Z/2", "--json"}).out);
  CHECK(j["group"] == "Z/4");
  CHECK(j["generators"][0]["order"] == 4);
}

TEST_CASE("couple and normalize commands") {
  const Outcome c = invoke({"couple", "Z/2"});
  REQUIRE(c.code == kExitOk);
  const ExactCouple d = read_couple(c.out);
  CHECK(d.b == C(4));
  CHECK(d.alpha.matrix() == IntMatrix{{2}});
  CHECK(d.beta.matrix() == IntMatrix{{1}});

  const std::string path = "test_cli_couple.txt";
  {
    std::ofstream(path) << c.out;
  }
  const Outcome n = invoke({"normalize", path});
  CHECK(n.code == kExitOk);
  CHECK(n.out.find("identity") != std::string::npos);

  const Rendered moved = render_normalize(
      "exact-couple v1\nA rank 0 torsion 2\nB rank 0 torsion 4\nalpha 1 1\n6\nbeta 1 1\n3\n", false, false);
  CHECK(moved.exit_code == kExitOk);

  const Rendered invalid = render_normalize(
      "exact-couple v1\nA rank 0 torsion 2\nB rank 0 torsion 2 2\nalpha 2 1\n1\n0\nbeta 1 2\n0 1\n", false, false);
  CHECK(invalid.exit_code == kExitMath);
  CHECK(invalid.text.find("alpha") != std::string::npos);

  CHECK(invoke({"normalize", "does-not-exist.txt"}).code == kExitUsage);
  {
    std::ofstream(path) << "exact-couple v1\nA rank 0\n";
  }
  const Outcome malformed = invoke({"normalize", path});
  CHECK(malformed.code == kExitUsage);
  CHECK(malformed.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"stems"}).code == kExitUsage);
  CHECK(invoke({"check", "--battery", "huge"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("json output is stable") {
  for (const char* g : {"Z", "Z/2", "Z^2 + Z/12 + Z/8"}) {
    CHECK(invoke({"stems", g, "--json"}).out == invoke({"stems", g, "--json"}).out);
    CHECK(invoke({"maps", g, "Z/2", "--json"}).out == invoke({"maps", g, "Z/2", "--json"}).out);
  }
}
