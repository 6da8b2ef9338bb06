#pragma once

// Historical reference tables stored exactly as printed, with errata kept as
// annotations next to the printed value, and the routine that recomputes
// them.
//
//   "table1": ways for n = 1..8 six-faced dice to make N = 1..36
//   "s22":    distribution of a 6-, 8- and 12-faced dice pool, N = 3..26

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "count.hpp"
#include "heterogeneous.hpp"
#include "homogeneous.hpp"

namespace dicecount::golden {

class UnknownTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Erratum {
  std::int64_t printed;
  std::int64_t corrected;
};

struct GoldenEntry {
  Exponent sum;   // N
  Exponent dice;  // n for table1; 0 for s22
  std::int64_t printed;
  std::optional<Erratum> erratum;
};

struct GoldenTable {
  std::string source;
  std::vector<GoldenEntry> entries;
  std::optional<std::int64_t> printed_total;  // s22 only
};

inline constexpr Exponent kTable1Faces = 6;
inline constexpr Exponent kTable1MaxDice = 8;
inline constexpr Exponent kTable1MaxSum = 36;

namespace detail {

struct PrintedRow {
  Exponent sum;
  std::int64_t counts[8];
};

// Rows as printed: N, then n = 1..8.
inline constexpr PrintedRow kTable1Rows[] = {
    {1, {1, 0, 0, 0, 0, 0, 0, 0}},
    {2, {1, 1, 0, 0, 0, 0, 0, 0}},
    {3, {1, 2, 1, 0, 0, 0, 0, 0}},
    {4, {1, 3, 3, 1, 0, 0, 0, 0}},
    {5, {1, 4, 6, 4, 1, 0, 0, 0}},
    {6, {1, 5, 10, 10, 5, 1, 0, 0}},
    {7, {0, 6, 15, 20, 15, 6, 1, 0}},
    {8, {0, 5, 21, 35, 35, 21, 7, 1}},
    {9, {0, 4, 25, 56, 70, 56, 28, 8}},
    {10, {0, 3, 27, 80, 126, 126, 84, 36}},
    {11, {0, 2, 27, 104, 205, 252, 210, 120}},
    {12, {0, 1, 25, 125, 305, 456, 462, 330}},
    {13, {0, 0, 21, 140, 420, 756, 917, 792}},
    {14, {0, 0, 15, 146, 540, 1161, 1667, 1708}},
    {15, {0, 0, 10, 140, 651, 1666, 2807, 3368}},
    {16, {0, 0, 6, 125, 735, 2247, 4417, 6147}},
    {17, {0, 0, 3, 104, 780, 2856, 6538, 10480}},
    {18, {0, 0, 1, 80, 780, 3431, 9142, 16808}},
    {19, {0, 0, 0, 56, 735, 3906, 12117, 25488}},
    {20, {0, 0, 0, 35, 651, 4221, 15267, 36688}},
    {21, {0, 0, 0, 20, 540, 4332, 18327, 50288}},
    {22, {0, 0, 0, 10, 420, 4221, 20993, 65808}},
    {23, {0, 0, 0, 4, 305, 3906, 22967, 82384}},
    {24, {0, 0, 0, 1, 205, 3431, 24017, 98813}},
    {25, {0, 0, 0, 0, 126, 2856, 24017, 113688}},
    {26, {0, 0, 0, 0, 70, 2247, 22967, 12588}},
    {27, {0, 0, 0, 0, 35, 1666, 20993, 133288}},
    {28, {0, 0, 0, 0, 15, 1161, 18327, 135954}},
    {29, {0, 0, 0, 0, 5, 756, 15267, 133288}},
    {30, {0, 0, 0, 0, 1, 456, 12117, 125588}},
    {31, {0, 0, 0, 0, 0, 252, 9142, 113688}},
    {32, {0, 0, 0, 0, 0, 126, 6538, 98813}},
    {33, {0, 0, 0, 0, 0, 56, 4417, 82384}},
    {34, {0, 0, 0, 0, 0, 21, 2807, 65808}},
    {35, {0, 0, 0, 0, 0, 6, 1667, 50288}},
    {36, {0, 0, 0, 0, 0, 1, 917, 36688}},
};

struct PrintedPair {
  Exponent sum;
  std::int64_t count;
};

inline constexpr PrintedPair kS22Rows[] = {
    {3, 1},   {4, 3},   {5, 6},   {6, 10},  {7, 15},  {8, 21},  {9, 27},  {10, 33},
    {11, 38}, {12, 42}, {13, 45}, {14, 47}, {15, 47}, {16, 45}, {17, 42}, {18, 38},
    {19, 33}, {20, 27}, {21, 21}, {22, 15}, {23, 10}, {24, 6},  {25, 3},  {26, 1},
};

}  // namespace detail

inline GoldenTable table1() {
  GoldenTable t{"table1", {}, std::nullopt};
  for (const auto& row : detail::kTable1Rows) {
    for (Exponent n = 1; n <= kTable1MaxDice; ++n) {
      GoldenEntry e{row.sum, n, row.counts[n - 1], std::nullopt};
      // printed 12588 breaks the mirror law against (30, 8) = 125588
      if (row.sum == 26 && n == 8) e.erratum = Erratum{12588, 125588};
      t.entries.push_back(e);
    }
  }
  return t;
}

/// Face counts of the s22 pool.
inline const std::vector<Exponent>& s22_faces() {
  static const std::vector<Exponent> faces{6, 8, 12};
  return faces;
}

inline GoldenTable s22() {
  GoldenTable t{"s22", {}, 576};
  for (const auto& r : detail::kS22Rows) t.entries.push_back({r.sum, 0, r.count, std::nullopt});
  return t;
}

inline GoldenTable load(std::string_view id) {
  if (id == "table1") return table1();
  if (id == "s22") return s22();
  throw UnknownTable("unknown golden table: " + std::string(id));
}

struct Mismatch {
  GoldenEntry entry;
  Count computed;
  /// Flagged as an erratum and the computed value equals the correction.
  bool explained() const { return entry.erratum && computed == entry.erratum->corrected; }
};

struct VerifyReport {
  std::string source;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  std::optional<std::int64_t> printed_total;
  std::optional<Count> computed_total;

  std::size_t matched() const { return checked - mismatches.size(); }

  /// Only flagged errata differ, each matching its correction, every flagged
  /// entry did differ, and any printed total agrees.
  bool clean(const GoldenTable& table) const {
    for (const auto& m : mismatches)
      if (!m.explained()) return false;
    std::size_t flagged = 0;
    for (const auto& e : table.entries)
      if (e.erratum) ++flagged;
    if (flagged != mismatches.size()) return false;
    if (printed_total && (!computed_total || *computed_total != *printed_total)) return false;
    return true;
  }
};

inline VerifyReport verify_table(const GoldenTable& table) {
  VerifyReport r;
  r.source = table.source;
  r.printed_total = table.printed_total;
  if (table.source == "table1") {
    const CountTable computed = count_table_add_die(kTable1Faces, kTable1MaxDice, kTable1MaxSum);
    for (const auto& e : table.entries) {
      ++r.checked;
      Count c = computed.at(e.sum, e.dice);
      if (c != e.printed) r.mismatches.push_back({e, c});
    }
  } else if (table.source == "s22") {
    std::vector<MarkedDie> dice;
    for (auto m : s22_faces()) dice.push_back(MarkedDie::consecutive(1, m));
    const auto dist = hetero_distribution(DicePool(std::move(dice)));
    Count total = 0;
    for (const auto& [sum, c] : dist) total += c;
    r.computed_total = total;
    for (const auto& e : table.entries) {
      ++r.checked;
      Count c = 0;
      for (const auto& [sum, v] : dist)
        if (sum == e.sum) c = v;
      if (c != e.printed) r.mismatches.push_back({e, c});
    }
    // a computed support wider than the printed one is also a mismatch
    for (const auto& [sum, v] : dist) {
      bool listed = false;
      for (const auto& e : table.entries) listed = listed || e.sum == sum;
      if (!listed) {
        ++r.checked;
        r.mismatches.push_back({GoldenEntry{sum, 0, 0, std::nullopt}, v});
      }
    }
  } else {
    throw UnknownTable("unknown golden table: " + table.source);
  }
  return r;
}

inline VerifyReport verify_table(std::string_view id) { return verify_table(load(id)); }

}  // namespace dicecount::golden
