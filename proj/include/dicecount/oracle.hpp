#pragma once

// Brute-force enumerators. Slow and obviously correct; every engine is
// checked against these at small scale. They share no code with the
// engines beyond the input types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "count.hpp"
#include "heterogeneous.hpp"
#include "polygonal.hpp"
#include "regula_virginum.hpp"

namespace dicecount::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

namespace detail {

// Product of sizes, throwing once it passes the budget.
inline void check_budget(const std::vector<std::uint64_t>& sizes, std::uint64_t budget, const char* who) {
  std::uint64_t total = 1;
  for (auto s : sizes) {
    if (s == 0) return;
    if (total > budget / s)
      throw BudgetExceeded(std::string(who) + ": search space exceeds budget of " + std::to_string(budget));
    total *= s;
  }
  if (total > budget)
    throw BudgetExceeded(std::string(who) + ": search space exceeds budget of " + std::to_string(budget));
}

}  // namespace detail

/// Every face combination of every die, counting those that total N.
inline Count brute_dice(const DicePool& pool, Exponent sum, std::uint64_t budget = kDefaultBudget) {
  std::vector<std::uint64_t> sizes;
  for (const auto& d : pool.dice()) sizes.push_back(d.faces());
  detail::check_budget(sizes, budget, "brute_dice");

  const auto& dice = pool.dice();
  std::vector<std::size_t> face(dice.size(), 0);
  std::uint64_t hits = 0;
  while (true) {
    Exponent total = 0;
    for (std::size_t i = 0; i < dice.size(); ++i) total += dice[i].marks()[face[i]];
    if (total == sum) ++hits;
    std::size_t i = 0;
    while (i < dice.size() && ++face[i] == dice[i].faces()) face[i++] = 0;
    if (i == dice.size()) break;
  }
  return hits;
}

/// k-tuples (ordered) or k-multisets (unordered) of parts summing to N.
inline Count brute_partitions(const PartSet& parts, Exponent k, Exponent sum, bool ordered,
                              std::uint64_t budget = kDefaultBudget) {
  std::vector<Exponent> usable;
  for (auto p : parts.parts())
    if (p <= sum) usable.push_back(p);
  if (k == 0) return sum == 0 ? 1 : 0;
  if (usable.empty()) return 0;
  detail::check_budget(std::vector<std::uint64_t>(static_cast<std::size_t>(k), usable.size()), budget,
                       "brute_partitions");

  // odometer over indices; the unordered reading keeps only non-decreasing index tuples
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::uint64_t hits = 0;
  while (true) {
    bool keep = true;
    if (!ordered)
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] < idx[i - 1]) keep = false;
    if (keep) {
      Exponent total = 0;
      for (auto i : idx) total += usable[i];
      if (total == sum) ++hits;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == usable.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return hits;
}

/// Nested loops over every variable within the range the targets allow.
inline Count brute_regula(const LinearSystem2& sys, std::uint64_t budget = kDefaultBudget) {
  const auto& gens = sys.generators();
  const Exponent lo = sys.mode() == SolutionMode::Positive ? 1 : 0;
  std::vector<Exponent> hi;
  std::vector<std::uint64_t> sizes;
  for (const auto& g : gens) {
    Exponent h = g.a > 0 ? sys.n() / g.a : sys.nu() / g.alpha;
    if (g.a > 0 && g.alpha > 0) h = std::min(h, sys.nu() / g.alpha);
    hi.push_back(h);
    sizes.push_back(h >= lo ? static_cast<std::uint64_t>(h - lo + 1) : 0);
  }
  for (auto s : sizes)
    if (s == 0) return 0;
  detail::check_budget(sizes, budget, "brute_regula");

  std::vector<Exponent> value(gens.size(), lo);
  std::uint64_t hits = 0;
  while (true) {
    Exponent first = 0;
    Exponent second = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      first += gens[i].a * value[i];
      second += gens[i].alpha * value[i];
    }
    if (first == sys.n() && second == sys.nu()) ++hits;
    std::size_t i = 0;
    while (i < value.size() && ++value[i] > hi[i]) value[i++] = lo;
    if (i == value.size()) break;
  }
  return hits;
}

}  // namespace dicecount::oracle
