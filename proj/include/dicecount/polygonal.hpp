#pragma once

/**
 * @file polygonal.hpp
 * @brief Polygonal-number series, their powers, and representability checks.
 *
 * Two views of "N is a sum of k m-gonal numbers":
 *   ordered   - coefficient of x^N in (1 + x + x^m + x^{3m-3} + ...)^k
 *   unordered - coefficient of x^N z^k in prod_p 1/(1 - x^p z), p over a part set
 * With 0 among the parts both views allow up to k nonzero summands.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "count.hpp"
#include "series.hpp"

namespace dicecount {

/// j-th m-gonal number ((m-2) j^2 - (m-4) j) / 2.
inline Exponent polygonal_number(Exponent sides, Exponent j) {
  if (sides < 3) throw std::invalid_argument("polygonal_number: sides must be >= 3");
  if (j < 0) throw std::invalid_argument("polygonal_number: index must be >= 0");
  return ((sides - 2) * j * j - (sides - 4) * j) / 2;
}

struct PolygonalSpec {
  Exponent sides;
  Exponent bound;

  void validate() const {
    if (sides < 3) throw std::invalid_argument("PolygonalSpec: sides must be >= 3");
    if (bound < 0) throw std::invalid_argument("PolygonalSpec: bound must be >= 0");
  }
};

/// Strictly ascending list of nonnegative part values.
class PartSet {
 public:
  explicit PartSet(std::vector<Exponent> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("PartSet: parts must be >= 0");
      if (i > 0 && parts_[i] <= parts_[i - 1])
        throw std::invalid_argument("PartSet: parts must be strictly ascending");
    }
  }

  const std::vector<Exponent>& parts() const noexcept { return parts_; }
  bool contains(Exponent v) const { return std::binary_search(parts_.begin(), parts_.end(), v); }

 private:
  std::vector<Exponent> parts_;
};

/// All m-gonal numbers <= bound, starting at 0.
inline PartSet polygonal_parts(const PolygonalSpec& spec) {
  spec.validate();
  std::vector<Exponent> parts;
  for (Exponent j = 0;; ++j) {
    Exponent p = polygonal_number(spec.sides, j);
    if (p > spec.bound) break;
    parts.push_back(p);
  }
  return PartSet(std::move(parts));
}

inline IntPoly polygonal_series(const PolygonalSpec& spec) {
  spec.validate();
  std::vector<Count> cs(static_cast<std::size_t>(spec.bound) + 1);
  const PartSet parts = polygonal_parts(spec);
  for (auto p : parts.parts()) cs[static_cast<std::size_t>(p)] = 1;
  return IntPoly(std::move(cs), spec.bound);
}

/// (polygonal series)^k up to x^bound: ordered k-tuples of m-gonal numbers (0 allowed).
inline IntPoly ordered_representation_counts(Exponent sides, std::uint64_t power, Exponent bound) {
  if (power < 1) throw std::invalid_argument("ordered_representation_counts: power must be >= 1");
  return poly_pow(polygonal_series({sides, bound}), power, bound);
}

/// Smallest e in 0..upto with a zero coefficient, or nullopt when none is missing.
inline std::optional<Exponent> check_all_positive(const IntPoly& p, Exponent upto) {
  if (upto < 0) throw std::invalid_argument("check_all_positive: upto must be >= 0");
  if (p.bound() && upto > *p.bound())
    throw std::invalid_argument("check_all_positive: upto exceeds the series bound");
  for (Exponent e = 0; e <= upto; ++e)
    if (p.coeff(e) == 0) return e;
  return std::nullopt;
}

/// Grid of coefficients of x^N z^k in prod_{p in parts} 1/(1 - x^p z), N <= max_sum, k <= max_parts.
inline BiPoly partition_grid(const PartSet& parts, Exponent max_parts, Exponent max_sum) {
  if (max_parts < 0 || max_sum < 0) throw std::invalid_argument("partition_grid: negative bound");
  BiPoly grid(max_sum, max_parts);
  grid.at(0, 0) = 1;
  for (auto p : parts.parts()) {
    if (p > max_sum) break;
    grid.divide_by_one_minus(p, 1);
  }
  return grid;
}

/// Multisets of exactly k values from parts summing to N.
inline Count count_partitions_with_parts(const PartSet& parts, Exponent k, Exponent sum) {
  if (k < 0) throw std::invalid_argument("count_partitions_with_parts: k must be >= 0");
  if (sum < 0) return 0;
  return partition_grid(parts, k, sum).at(sum, k);
}

}  // namespace dicecount
