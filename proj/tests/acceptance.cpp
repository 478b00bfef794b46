// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "moorecalc/battery.hpp"
#include "moorecalc/cli.hpp"

using namespace moorecalc;
using battery::CheckResult;

namespace {

struct Criterion {
  int number;
  CheckResult result;
  double time_limit;  // seconds, 0 = none
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<long> torsion_of(const nlohmann::json& j) {
  std::vector<long> out;
  for (const auto& x : j) out.push_back(x.get<long>());
  return out;
}

CheckResult check_cli() {
  CheckResult r;
  r.name = "command line round trip and snapshots";
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    std::mt19937_64 rng(10);
    int round_trips = 0;
    for (int s = 0; s < 100; ++s) {
      const AbelianGroup g = rng() % 4 == 0 ? AbelianGroup::free(1 + rng() % 3)
                                            : direct_sum(AbelianGroup::free(rng() % 3),
                                                         battery::random_finite_group(rng, 4, 240));
      const std::string text = cli::format_group(g);
      if (cli::parse_group(text) == g && cli::format_group(cli::parse_group(text)) == text)
        ++round_trips;
      else
        detail << " round trip fails on " << text;
    }
    ok = round_trips == 100;
    detail << round_trips << "/100 round trips";

    struct Snapshot {
      std::string file;
      std::string rendered;
    };
    const AbelianGroup z = AbelianGroup::free(1), p = AbelianGroup::cyclic(2);
    const std::vector<Snapshot> snapshots{
        {"stems_Z.json", cli::render_stems(z, {true, false, std::nullopt})},
        {"stems_Z2.json", cli::render_stems(p, {true, false, std::nullopt})},
        {"maps_Z2_Z2.json", cli::render_maps(p, p, true, false)},
        {"maps_Z_Z24.json", cli::render_maps(z, AbelianGroup::cyclic(24), true, false)},
        {"maps_Z2_Z.json", cli::render_maps(p, z, true, false)},
    };
    int stable = 0;
    for (const auto& s : snapshots) {
      const std::string stored = read_file(std::string(SNAPSHOT_DIR) + "/" + s.file);
      if (!stored.empty() && stored == s.rendered) {
        ++stable;
      } else {
        ok = false;
        detail << ", " << s.file << " differs from the stored snapshot";
      }
    }
    detail << ", " << stable << "/" << snapshots.size() << " snapshots byte-identical";

    // The snapshots themselves carry the golden values.
    const auto sphere = nlohmann::json::parse(snapshots[0].rendered);
    const std::vector<std::vector<long>> stems{{}, {2}, {2}, {24}, {}, {}, {2}, {240}};
    for (int q = 0; q < 8; ++q) ok = ok && torsion_of(sphere[q]["torsion"]) == stems[static_cast<std::size_t>(q)];
    ok = ok && sphere[0]["rank"] == 1;
    const auto mod2 = nlohmann::json::parse(snapshots[1].rendered);
    ok = ok && torsion_of(mod2[2]["torsion"]) == std::vector<long>{4} &&
         torsion_of(mod2[3]["torsion"]) == std::vector<long>{2, 2} &&
         torsion_of(mod2[7]["torsion"]) == std::vector<long>{2, 2};
    ok = ok && nlohmann::json::parse(snapshots[2].rendered)["group"] == "Z/4" &&
         nlohmann::json::parse(snapshots[3].rendered)["group"] == "Z/24" &&
         nlohmann::json::parse(snapshots[4].rendered)["group"] == "Z/2";
  } catch (const std::exception& e) {
    ok = false;
    detail << " exception: " << e.what();
  }
  r.passed = ok;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = detail.str();
  return r;
}

}  // namespace

int main() {
  using battery::Size;
  const std::vector<Criterion> criteria{
      {1, battery::check_golden_sphere(), 1.0},
      {2, battery::check_golden_moore_p(), 0},
      {3, battery::check_morphism_groups(), 0},
      {4, battery::check_order_identities(Size::kFull), 30.0},
      {5, battery::check_lambda_suite(Size::kFull), 0},
      {6, battery::check_oracle_equivalence(Size::kFull), 0},
      {7, battery::check_equivalence_of_categories(Size::kFull), 0},
      {8, battery::check_couple_relations(), 0},
      {9, battery::check_snf_properties(Size::kFull), 5.0},
      {10, check_cli(), 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const bool in_time = c.time_limit == 0 || c.result.seconds < c.time_limit;
    const bool pass = c.result.passed && in_time;
    all = all && pass;
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f s", c.result.seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.result.name << " (" << seconds;
    if (c.time_limit > 0) std::cout << ", limit " << c.time_limit << " s";
    std::cout << ") " << c.result.detail << '\n';
  }
  return all ? 0 : 1;
}
