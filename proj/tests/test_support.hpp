#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "dicecount/series.hpp"

namespace dicecount::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'd1ceULL);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Random untruncated polynomial with small signed coefficients.
inline IntPoly random_poly(std::int64_t max_degree = 8, std::int64_t max_coeff = 9) {
  std::vector<Count> cs(static_cast<std::size_t>(uniform(0, max_degree)) + 1);
  for (auto& c : cs) c = uniform(-max_coeff, max_coeff);
  return IntPoly(std::move(cs));
}

}  // namespace dicecount::testing
