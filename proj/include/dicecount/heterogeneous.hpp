#pragma once

// Pools of unlike dice: arbitrary face marks, and the closed form for dice
// whose faces are 1..m_i.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "count.hpp"
#include "homogeneous.hpp"
#include "series.hpp"

namespace dicecount {

/// One die: a multiset of nonnegative face marks.
class MarkedDie {
 public:
  explicit MarkedDie(std::vector<Exponent> marks) : marks_(std::move(marks)) {
    if (marks_.empty()) throw std::invalid_argument("MarkedDie: a die needs at least one face");
    for (auto m : marks_)
      if (m < 0) throw std::invalid_argument("MarkedDie: face marks must be >= 0");
  }

  /// Faces marked lo, lo+1, ..., hi.
  static MarkedDie consecutive(Exponent lo, Exponent hi) {
    if (hi < lo) throw std::invalid_argument("MarkedDie: empty face range");
    std::vector<Exponent> marks;
    for (Exponent v = lo; v <= hi; ++v) marks.push_back(v);
    return MarkedDie(std::move(marks));
  }

  const std::vector<Exponent>& marks() const noexcept { return marks_; }
  std::size_t faces() const noexcept { return marks_.size(); }
  Exponent max_mark() const { return *std::max_element(marks_.begin(), marks_.end()); }

  /// Sum of x^mark over the faces; repeated marks add up.
  IntPoly generating_poly() const {
    std::vector<Count> cs(static_cast<std::size_t>(max_mark()) + 1);
    for (auto m : marks_) cs[static_cast<std::size_t>(m)] += 1;
    return IntPoly(std::move(cs));
  }

 private:
  std::vector<Exponent> marks_;
};

class DicePool {
 public:
  explicit DicePool(std::vector<MarkedDie> dice) : dice_(std::move(dice)) {
    if (dice_.empty()) throw std::invalid_argument("DicePool: pool needs at least one die");
  }

  /// n copies of a die with faces 1..m.
  static DicePool uniform(Exponent n, Exponent m) {
    if (n < 1 || m < 1) throw std::invalid_argument("DicePool::uniform: need n >= 1 and m >= 1");
    return DicePool(std::vector<MarkedDie>(static_cast<std::size_t>(n), MarkedDie::consecutive(1, m)));
  }

  const std::vector<MarkedDie>& dice() const noexcept { return dice_; }
  std::size_t size() const noexcept { return dice_.size(); }

  Exponent max_total() const {
    Exponent t = 0;
    for (const auto& d : dice_) t += d.max_mark();
    return t;
  }

  /// Number of outcomes: product of face counts.
  Count outcomes() const {
    Count c = 1;
    for (const auto& d : dice_) c *= d.faces();
    return c;
  }

 private:
  std::vector<MarkedDie> dice_;
};

/// Product of the dice generating polynomials, optionally truncated.
inline IntPoly pool_generating_poly(const DicePool& pool, std::optional<Exponent> bound = std::nullopt) {
  IntPoly acc({Count(1)}, bound);
  for (const auto& d : pool.dice()) acc = poly_mul(acc, d.generating_poly(), bound);
  return acc;
}

inline Count hetero_count_product(const DicePool& pool, Exponent sum) {
  if (sum < 0 || sum > pool.max_total()) return 0;
  return pool_generating_poly(pool, sum).coeff(sum);
}

struct SignedTerm {
  int sign;  // +1 or -1
  Exponent exponent;

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Expansion of prod_i (1 - x^{m_i}), shifted by k = number of factors.
/// Unmerged it has exactly 2^k terms; merged, equal exponents are combined
/// and cancelled terms dropped (the result is then sorted by exponent and
/// may carry |sign| > 1 folded into repeated entries).
inline std::vector<SignedTerm> expand_numerator(const std::vector<Exponent>& face_counts, bool merge = true) {
  const auto k = static_cast<Exponent>(face_counts.size());
  std::vector<SignedTerm> terms{{+1, k}};
  for (auto m : face_counts) {
    if (m < 1) throw std::invalid_argument("expand_numerator: face counts must be >= 1");
    std::vector<SignedTerm> next;
    next.reserve(terms.size() * 2);
    for (const auto& t : terms) {
      next.push_back(t);
      next.push_back({-t.sign, t.exponent + m});
    }
    terms = std::move(next);
  }
  if (!merge) return terms;
  std::map<Exponent, long long> net;
  for (const auto& t : terms) net[t.exponent] += t.sign;
  std::vector<SignedTerm> merged;
  for (auto [e, c] : net) {
    for (long long i = 0; i < (c < 0 ? -c : c); ++i) merged.push_back({c < 0 ? -1 : +1, e});
  }
  return merged;
}

/// Dice with faces 1..m_i: sum over numerator terms of sign * C(N - e + k - 1, k - 1), for e <= N.
inline Count hetero_count_closed_form(const std::vector<Exponent>& face_counts, Exponent sum) {
  if (face_counts.empty()) throw std::invalid_argument("hetero_count_closed_form: empty pool");
  const auto k = static_cast<Exponent>(face_counts.size());
  Count total = 0;
  for (const auto& t : expand_numerator(face_counts)) {
    if (t.exponent > sum) continue;
    Count b = binomial(sum - t.exponent + k - 1, k - 1);
    if (t.sign > 0) total += b; else total -= b;
  }
  return total;
}

/// All (N, count) with nonzero count, ascending in N.
inline std::vector<std::pair<Exponent, Count>> hetero_distribution(const DicePool& pool) {
  const IntPoly p = pool_generating_poly(pool);
  std::vector<std::pair<Exponent, Count>> out;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e)
    if (p.coeffs()[e] != 0) out.emplace_back(static_cast<Exponent>(e), p.coeffs()[e]);
  return out;
}

/// Face counts if every die is marked exactly 1..m_i, else empty.
inline std::vector<Exponent> consecutive_face_counts(const DicePool& pool) {
  std::vector<Exponent> counts;
  for (const auto& d : pool.dice()) {
    auto marks = d.marks();
    std::sort(marks.begin(), marks.end());
    for (std::size_t i = 0; i < marks.size(); ++i)
      if (marks[i] != static_cast<Exponent>(i) + 1) return {};
    counts.push_back(static_cast<Exponent>(marks.size()));
  }
  return counts;
}

}  // namespace dicecount
