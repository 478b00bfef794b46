#pragma once

// Verification battery: each check compares a main-path computation with a
// golden value, an identity between orders, or an independent oracle.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "moorecalc/fga.hpp"

namespace moorecalc::battery {

enum class Size { kSmall, kFull };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Z, Z/2, Z/3, Z/4, Z/8, Z/9, Z/12, Z/24, Z/240.
std::vector<AbelianGroup> cyclic_battery();
// The cyclic battery followed by every sum of two of its members.
std::vector<AbelianGroup> cyclic_battery_with_sums();

// Finite group with 1..max_factors invariant factors, each <= max_factor.
AbelianGroup random_finite_group(std::mt19937_64& rng, std::size_t max_factors = 4, unsigned max_factor = 64);
// Random unimodular automorphism of a finite or infinite canonical group.
GroupHom random_automorphism(const AbelianGroup& g, std::mt19937_64& rng);

CheckResult check_golden_sphere();
CheckResult check_golden_moore_p();
CheckResult check_morphism_groups();
CheckResult check_order_identities(Size size, std::uint64_t seed = 4);
CheckResult check_lambda_suite(Size size);
CheckResult check_oracle_equivalence(Size size);
CheckResult check_equivalence_of_categories(Size size, std::uint64_t seed = 7);
CheckResult check_couple_relations();
CheckResult check_snf_properties(Size size, std::uint64_t seed = 9);

std::vector<CheckResult> run_battery(Size size);

}  // namespace moorecalc::battery
