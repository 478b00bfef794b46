#pragma once

#include <vector>

#include "moorecalc/fga.hpp"

namespace test {

inline moorecalc::AbelianGroup Z(std::size_t rank = 1) { return moorecalc::AbelianGroup::free(rank); }
inline moorecalc::AbelianGroup C(long d) { return moorecalc::AbelianGroup::cyclic(d); }
inline moorecalc::AbelianGroup finite(std::vector<long> factors) {
  std::vector<moorecalc::Integer> t(factors.begin(), factors.end());
  return moorecalc::AbelianGroup(0, std::move(t));
}

}  // namespace test
