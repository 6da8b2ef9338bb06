#pragma once

// JSON and CSV encodings shared by the CLI and the shipped data files.
// Counts are always decimal strings in JSON.

#include <sstream>
#include <string>

#include "json.hpp"

#include "golden.hpp"
#include "homogeneous.hpp"

namespace dicecount::io {

using Json = nlohmann::ordered_json;

/// {"m", "n_max", "N_max", "rows": [{"N", "counts": [...one per n...]}]}, rows N = 1..N_max.
inline Json table_to_json(const CountTable& t) {
  Json rows = Json::array();
  for (Exponent s = 1; s <= t.max_sum(); ++s) {
    Json counts = Json::array();
    for (Exponent n = 1; n <= t.max_dice(); ++n) counts.push_back(to_string(t.at(s, n)));
    rows.push_back(Json{{"N", s}, {"counts", std::move(counts)}});
  }
  return Json{{"m", t.faces()}, {"n_max", t.max_dice()}, {"N_max", t.max_sum()}, {"rows", std::move(rows)}};
}

inline std::string table_to_csv(const CountTable& t) {
  std::ostringstream os;
  os << 'N';
  for (Exponent n = 1; n <= t.max_dice(); ++n) os << ",n=" << n;
  os << '\n';
  for (Exponent s = 1; s <= t.max_sum(); ++s) {
    os << s;
    for (Exponent n = 1; n <= t.max_dice(); ++n) os << ',' << t.at(s, n);
    os << '\n';
  }
  return os.str();
}

/// Canonical text form: two-space indent plus trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Golden table in the table schema; flagged entries carry an
/// "erratum": {"n", "printed", "corrected"} object on their row.
inline Json golden_to_json(const golden::GoldenTable& g) {
  Json rows = Json::array();
  if (g.source == "table1") {
    for (Exponent s = 1; s <= golden::kTable1MaxSum; ++s) {
      Json row{{"N", s}, {"counts", Json::array()}};
      for (const auto& e : g.entries) {
        if (e.sum != s) continue;
        row["counts"].push_back(std::to_string(e.printed));
        if (e.erratum)
          row["erratum"] = Json{{"n", e.dice},
                                {"printed", std::to_string(e.erratum->printed)},
                                {"corrected", std::to_string(e.erratum->corrected)}};
      }
      rows.push_back(std::move(row));
    }
    return Json{{"source", g.source},
                {"m", golden::kTable1Faces},
                {"n_max", golden::kTable1MaxDice},
                {"N_max", golden::kTable1MaxSum},
                {"rows", std::move(rows)}};
  }
  for (const auto& e : g.entries) rows.push_back(Json{{"N", e.sum}, {"counts", Json::array({std::to_string(e.printed)})}});
  Json out{{"source", g.source}, {"faces", golden::s22_faces()}, {"rows", std::move(rows)}};
  if (g.printed_total) out["total"] = std::to_string(*g.printed_total);
  return out;
}

}  // namespace dicecount::io
