#pragma once

/**
 * @file homogeneous.hpp
 * @brief Ways for n identical dice with faces 1..m to sum to N.
 *
 * Four independent engines compute the same count:
 *   - count_poly:              coefficient of x^N in (x + ... + x^m)^n
 *   - count_table_add_die:     column-by-column table, one die at a time
 *   - count_lambda_recurrence: fixed n, walking the offset lambda = N - n
 *   - count_closed_form:       alternating binomial sum
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "count.hpp"
#include "series.hpp"

namespace dicecount {

struct HomoQuery {
  Exponent dice;   // n
  Exponent faces;  // m
  Exponent sum;    // N

  void validate() const {
    if (dice < 1) throw std::invalid_argument("HomoQuery: number of dice must be >= 1");
    if (faces < 1) throw std::invalid_argument("HomoQuery: number of faces must be >= 1");
    if (sum < 0) throw std::invalid_argument("HomoQuery: target sum must be >= 0");
  }
};

/// C(a, b), zero when b < 0 or b > a. Multiplicative form with exact running division.
inline Count binomial(Exponent a, Exponent b) {
  if (a < 0) throw std::invalid_argument("binomial: a must be >= 0");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count r = 1;
  for (Exponent i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // r is C(a - b + i, i) here, so the division is exact
  }
  return r;
}

inline Count count_poly(const HomoQuery& q) {
  q.validate();
  if (q.sum < q.dice || q.sum > q.dice * q.faces) return 0;
  return poly_pow(IntPoly::range(1, q.faces), static_cast<std::uint64_t>(q.dice), q.sum).coeff(q.sum);
}

/// entries[N][n] = ways for n dice with faces 1..m to sum to N.
class CountTable {
 public:
  CountTable(Exponent faces, Exponent max_dice, Exponent max_sum)
      : faces_(faces), max_dice_(max_dice), max_sum_(max_sum),
        cells_(static_cast<std::size_t>((max_sum + 1) * (max_dice + 1))) {}

  Exponent faces() const noexcept { return faces_; }
  Exponent max_dice() const noexcept { return max_dice_; }
  Exponent max_sum() const noexcept { return max_sum_; }

  /// Entry at (N, n); zero for any coordinate outside the table.
  Count at(Exponent sum, Exponent dice) const {
    if (sum < 0 || dice < 1 || sum > max_sum_ || dice > max_dice_) return 0;
    return cells_[index(sum, dice)];
  }

  void set(Exponent sum, Exponent dice, Count value) { cells_[index(sum, dice)] = std::move(value); }

  /// Column n as a list indexed by N = 0..max_sum.
  std::vector<Count> column(Exponent dice) const {
    std::vector<Count> col;
    col.reserve(static_cast<std::size_t>(max_sum_) + 1);
    for (Exponent s = 0; s <= max_sum_; ++s) col.push_back(at(s, dice));
    return col;
  }

 private:
  std::size_t index(Exponent sum, Exponent dice) const {
    return static_cast<std::size_t>(sum * (max_dice_ + 1) + dice);
  }

  Exponent faces_;
  Exponent max_dice_;
  Exponent max_sum_;
  std::vector<Count> cells_;
};

/// Builds the table with (N+1)^(n) = (N)^(n) + (N)^(n-1) - (N-m)^(n-1),
/// filling by increasing n, then increasing N.
inline CountTable count_table_add_die(Exponent faces, Exponent max_dice, Exponent max_sum) {
  if (faces < 1) throw std::invalid_argument("count_table_add_die: faces must be >= 1");
  if (max_dice < 1) throw std::invalid_argument("count_table_add_die: max_dice must be >= 1");
  if (max_sum < 1) throw std::invalid_argument("count_table_add_die: max_sum must be >= 1");
  CountTable t(faces, max_dice, max_sum);
  for (Exponent s = 1; s <= std::min(faces, max_sum); ++s) t.set(s, 1, 1);
  for (Exponent n = 2; n <= max_dice; ++n) {
    for (Exponent s = 1; s <= max_sum; ++s) {
      // reads only column n-1 and the cell just below in column n
      t.set(s, n, t.at(s - 1, n) + t.at(s - 1, n - 1) - t.at(s - 1 - faces, n - 1));
    }
  }
  return t;
}

inline Count count_table_add_die(const HomoQuery& q) {
  q.validate();
  if (q.sum < 1) return 0;
  return count_table_add_die(q.faces, q.dice, q.sum).at(q.sum, q.dice);
}

/// One step of the lambda recurrence: value = numerator / lambda.
struct LambdaStep {
  Exponent lambda;
  Count numerator;
  Count value;
};

/// All steps lambda = 1..N-n of
///   lambda (n+lambda) = (n+lambda-1)(n+lambda-1) - (mn+m-lambda)(n+lambda-m)
///                       + (mn-n+m+1-lambda)(n+lambda-m-1),
/// each term written as multiplier * count at that sum. Seeded with (n)^(n) = 1.
/// Throws DivisibilityError if a numerator is not a multiple of lambda.
inline std::vector<LambdaStep> lambda_recurrence_trace(const HomoQuery& q) {
  q.validate();
  const Exponent n = q.dice;
  const Exponent m = q.faces;
  const Exponent last = q.sum - n;
  std::vector<LambdaStep> steps;
  if (last <= 0) return steps;
  // values[l] = count at sum n + l; negative offsets are zero
  std::vector<Count> values(static_cast<std::size_t>(last) + 1);
  values[0] = 1;
  auto value_at = [&](Exponent l) -> Count { return l < 0 ? Count(0) : values[static_cast<std::size_t>(l)]; };
  steps.reserve(static_cast<std::size_t>(last));
  for (Exponent l = 1; l <= last; ++l) {
    Count numerator = Count(n + l - 1) * value_at(l - 1)
                    - Count(m * n + m - l) * value_at(l - m)
                    + Count(m * n - n + m + 1 - l) * value_at(l - m - 1);
    Count remainder = numerator % l;
    if (remainder != 0) {
      throw DivisibilityError("lambda recurrence: numerator " + numerator.str() +
                              " not divisible by " + std::to_string(l) + " (n=" + std::to_string(n) +
                              ", m=" + std::to_string(m) + ")");
    }
    Count v = numerator / l;
    values[static_cast<std::size_t>(l)] = v;
    steps.push_back({l, std::move(numerator), std::move(v)});
  }
  return steps;
}

inline Count count_lambda_recurrence(const HomoQuery& q) {
  q.validate();
  if (q.sum < q.dice) return 0;
  if (q.sum == q.dice) return 1;
  Count v = lambda_recurrence_trace(q).back().value;
  if (v < 0) throw DivisibilityError("lambda recurrence: negative final count");
  return v;
}

/// (n+lambda)^(n) = sum_j (-1)^j C(n,j) C(n+lambda-jm-1, lambda-jm), over lambda-jm >= 0.
inline Count count_closed_form(const HomoQuery& q) {
  q.validate();
  const Exponent n = q.dice;
  const Exponent m = q.faces;
  const Exponent lambda = q.sum - n;
  if (lambda < 0) return 0;
  Count total = 0;
  for (Exponent j = 0; j <= n && lambda - j * m >= 0; ++j) {
    Count term = binomial(n, j) * binomial(n + lambda - j * m - 1, lambda - j * m);
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

enum class Engine { Poly, AddDie, Lambda, Closed };

inline constexpr Engine kAllEngines[] = {Engine::Poly, Engine::AddDie, Engine::Lambda, Engine::Closed};

inline std::string engine_name(Engine e) {
  switch (e) {
    case Engine::Poly: return "poly";
    case Engine::AddDie: return "add-die";
    case Engine::Lambda: return "lambda";
    case Engine::Closed: return "closed";
  }
  return "?";
}

inline Count count_with(Engine e, const HomoQuery& q) {
  switch (e) {
    case Engine::Poly: return count_poly(q);
    case Engine::AddDie: return count_table_add_die(q);
    case Engine::Lambda: return count_lambda_recurrence(q);
    case Engine::Closed: return count_closed_form(q);
  }
  throw std::invalid_argument("unknown engine");
}

}  // namespace dicecount
