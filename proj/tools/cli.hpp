#pragma once

// Command-line frontend. Exit codes: 0 success, 2 usage error,
// 3 verification or consistency failure.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dicecount/dicecount.hpp"
#include "dicecount/io.hpp"

namespace dicecount::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kFailed = 3;

/// Malformed argument detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using io::Json;

inline Exponent parse_int(const std::string& s, const std::string& what) {
  Exponent v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) throw UsageError("malformed " + what + ": '" + s + "'");
  return v;
}

/// "lo..hi", "a,b,c" or a single mark.
inline MarkedDie parse_die(const std::string& spec) {
  try {
    if (auto dots = spec.find(".."); dots != std::string::npos) {
      Exponent lo = parse_int(spec.substr(0, dots), "die range");
      Exponent hi = parse_int(spec.substr(dots + 2), "die range");
      return MarkedDie::consecutive(lo, hi);
    }
    std::vector<Exponent> marks;
    std::size_t start = 0;
    while (true) {
      auto comma = spec.find(',', start);
      marks.push_back(parse_int(spec.substr(start, comma - start), "die mark"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return MarkedDie(std::move(marks));
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad die '" + spec + "': " + e.what());
  }
}

/// "x:y" pair of integers.
inline std::pair<Exponent, Exponent> parse_pair(const std::string& s, const std::string& what) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("malformed " + what + ": '" + s + "' (expected a:b)");
  return {parse_int(s.substr(0, colon), what), parse_int(s.substr(colon + 1), what)};
}

struct CountArgs {
  Exponent dice = 0;
  Exponent faces = 0;
  Exponent sum = 0;
  std::string engine = "poly";
  bool oracle = false;
  std::uint64_t budget = oracle::kDefaultBudget;
  std::string format = "plain";
};

inline int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  const HomoQuery q{a.dice, a.faces, a.sum};
  std::vector<std::pair<std::string, Count>> results;
  if (a.engine == "all") {
    for (auto e : kAllEngines) results.emplace_back(engine_name(e), count_with(e, q));
  } else {
    for (auto e : kAllEngines)
      if (engine_name(e) == a.engine) results.emplace_back(a.engine, count_with(e, q));
  }
  std::optional<Count> brute;
  if (a.oracle) {
    try {
      brute = oracle::brute_dice(DicePool::uniform(a.dice, a.faces), a.sum, a.budget);
    } catch (const BudgetExceeded& e) {
      throw UsageError(std::string(e.what()) + "; raise --oracle-budget or drop --oracle");
    }
  }

  if (a.format == "json") {
    Json j{{"n", a.dice}, {"m", a.faces}, {"N", a.sum}, {"results", Json::array()}};
    for (const auto& [name, c] : results) j["results"].push_back(Json{{"engine", name}, {"count", to_string(c)}});
    if (brute) j["oracle"] = to_string(*brute);
    out << io::dump(j);
  } else if (a.format == "csv") {
    out << "engine,n,m,N,count\n";
    for (const auto& [name, c] : results)
      out << name << ',' << a.dice << ',' << a.faces << ',' << a.sum << ',' << c << '\n';
    if (brute) out << "oracle," << a.dice << ',' << a.faces << ',' << a.sum << ',' << *brute << '\n';
  } else {
    for (const auto& [name, c] : results) out << c << '\n';
  }

  int rc = kOk;
  for (const auto& [name, c] : results) {
    if (c != results.front().second) {
      err << "engine disagreement: " << results.front().first << '=' << results.front().second << ", " << name
          << '=' << c << '\n';
      rc = kFailed;
    }
    if (brute && c != *brute) {
      err << "oracle mismatch: " << name << '=' << c << ", brute force=" << *brute << '\n';
      rc = kFailed;
    }
  }
  return rc;
}

struct TableArgs {
  Exponent faces = 0;
  Exponent max_dice = 0;
  Exponent max_sum = 0;
  std::string format = "csv";
};

inline int cmd_table(const TableArgs& a, std::ostream& out, std::ostream&) {
  const CountTable t = count_table_add_die(a.faces, a.max_dice, a.max_sum);
  if (a.format == "json") out << io::dump(io::table_to_json(t));
  else out << io::table_to_csv(t);
  return kOk;
}

struct HeteroArgs {
  std::vector<std::string> dice;
  std::optional<Exponent> sum;
  std::string engine = "product";
  std::string format = "plain";
};

inline int cmd_hetero(const HeteroArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<MarkedDie> dice;
  for (const auto& spec : a.dice) dice.push_back(parse_die(spec));
  const DicePool pool(std::move(dice));
  const auto faces = consecutive_face_counts(pool);
  if (a.engine != "product" && faces.empty())
    throw UsageError("engine '" + a.engine + "' needs every die marked 1..m");

  int rc = kOk;
  const IntPoly product_poly = pool_generating_poly(pool);
  auto count_at = [&](Exponent s) -> Count {
    Count product = product_poly.coeff(s);
    if (a.engine == "product") return product;
    Count closed = hetero_count_closed_form(faces, s);
    if (a.engine == "all" && closed != product) {
      err << "engine disagreement at N=" << s << ": product=" << product << ", closed=" << closed << '\n';
      rc = kFailed;
    }
    return closed;
  };

  Json dice_json = Json::array();
  for (const auto& d : pool.dice()) dice_json.push_back(d.marks());

  if (a.sum) {
    const Count c = count_at(*a.sum);
    if (a.format == "json") out << io::dump(Json{{"dice", dice_json}, {"N", *a.sum}, {"count", to_string(c)}});
    else if (a.format == "csv") out << "N,count\n" << *a.sum << ',' << c << '\n';
    else out << c << '\n';
    return rc;
  }

  std::vector<std::pair<Exponent, Count>> dist;
  Count total = 0;
  for (Exponent s = 0; s <= pool.max_total(); ++s) {
    Count c = count_at(s);
    if (c == 0) continue;
    total += c;
    dist.emplace_back(s, std::move(c));
  }
  if (total != pool.outcomes()) {
    err << "total " << total << " differs from the outcome count " << pool.outcomes() << '\n';
    rc = kFailed;
  }
  if (a.format == "json") {
    Json rows = Json::array();
    for (const auto& [s, c] : dist) rows.push_back(Json{{"N", s}, {"count", to_string(c)}});
    out << io::dump(Json{{"dice", dice_json}, {"distribution", rows}, {"total", to_string(total)}});
  } else if (a.format == "csv") {
    out << "N,count\n";
    for (const auto& [s, c] : dist) out << s << ',' << c << '\n';
    out << "total," << total << '\n';
  } else {
    for (const auto& [s, c] : dist) out << s << ' ' << c << '\n';
    out << "total " << total << '\n';
  }
  return rc;
}

struct PolygonalArgs {
  Exponent sides = 0;
  Exponent power = 0;
  Exponent upto = 0;
  bool unordered = false;
  std::string format = "plain";
};

inline int cmd_polygonal(const PolygonalArgs& a, std::ostream& out, std::ostream&) {
  if (a.sides < 3) throw UsageError("--sides must be >= 3");
  std::optional<Exponent> gap;
  if (a.unordered) {
    const BiPoly grid = partition_grid(polygonal_parts({a.sides, a.upto}), a.power, a.upto);
    gap = check_all_positive(grid.slice_y(a.power), a.upto);
  } else {
    gap = check_all_positive(ordered_representation_counts(a.sides, static_cast<std::uint64_t>(a.power), a.upto),
                             a.upto);
  }
  if (a.format == "json") {
    Json j{{"sides", a.sides}, {"power", a.power}, {"upto", a.upto}, {"ordered", !a.unordered},
           {"all_representable", !gap.has_value()}};
    j["first_gap"] = gap ? Json(*gap) : Json(nullptr);
    out << io::dump(j);
  } else if (gap) {
    out << "first gap at " << *gap << '\n';
  } else {
    out << "all exponents 0.." << a.upto << " representable\n";
  }
  return kOk;
}

struct VirginsArgs {
  std::vector<std::string> gens;
  std::string targets;
  bool positive = false;
  std::optional<std::size_t> list;
  std::string format = "plain";
};

inline int cmd_virgins(const VirginsArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Generator> gens;
  for (const auto& g : a.gens) {
    auto [x, y] = parse_pair(g, "generator");
    gens.push_back({x, y});
  }
  auto [n, nu] = parse_pair(a.targets, "targets");
  std::optional<LinearSystem2> sys;
  try {
    sys.emplace(std::move(gens), n, nu, a.positive ? SolutionMode::Positive : SolutionMode::Nonnegative);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Count count = rv_count_solutions(*sys);
  std::optional<SolutionList> listed;
  if (a.list) listed = rv_enumerate_solutions(*sys, *a.list);

  if (a.format == "json") {
    Json gj = Json::array();
    for (const auto& g : sys->generators()) gj.push_back(Json::array({g.a, g.alpha}));
    Json j{{"generators", gj},
           {"targets", Json::array({n, nu})},
           {"mode", a.positive ? "positive" : "nonnegative"},
           {"count", to_string(count)}};
    if (listed) {
      j["solutions"] = listed->solutions;
      j["truncated"] = listed->truncated;
    }
    out << io::dump(j);
  } else {
    out << count << '\n';
    if (listed) {
      for (const auto& s : listed->solutions) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << '\n';
      }
      if (listed->truncated) out << "(truncated at " << *a.list << ")\n";
    }
  }

  if (listed) {
    const Count shown = listed->solutions.size();
    if (listed->truncated ? count <= shown : count != shown) {
      err << "listing disagrees with count: listed " << shown << (listed->truncated ? "+" : "") << ", counted "
          << count << '\n';
      return kFailed;
    }
  }
  return kOk;
}

inline int cmd_verify(const std::string& which, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (which == "all") ids = {"table1", "s22"};
  else ids = {which};
  int rc = kOk;
  for (const auto& id : ids) {
    const golden::GoldenTable table = golden::load(id);
    const golden::VerifyReport r = golden::verify_table(table);
    const bool clean = r.clean(table);
    std::size_t unexplained = 0;
    for (const auto& m : r.mismatches) unexplained += m.explained() ? 0 : 1;

    out << id << ": " << r.matched() << '/' << r.checked << (id == "table1" ? " printed entries" : " entries")
        << " match";
    if (r.computed_total) out << "; total " << *r.computed_total;
    if (r.mismatches.size() > unexplained) {
      out << "; " << (r.mismatches.size() - unexplained) << " known erratum confirmed";
      for (const auto& m : r.mismatches)
        if (m.explained())
          out << " at (N=" << m.entry.sum << ",n=" << m.entry.dice << "): printed " << m.entry.printed
              << ", computed " << m.computed;
    }
    out << '\n';
    for (const auto& m : r.mismatches) {
      if (m.explained()) continue;
      out << "  mismatch at N=" << m.entry.sum;
      if (m.entry.dice > 0) out << ", n=" << m.entry.dice;
      out << ": printed " << m.entry.printed << ", computed " << m.computed << '\n';
    }
    if (r.printed_total && r.computed_total && *r.computed_total != *r.printed_total)
      out << "  total mismatch: printed " << *r.printed_total << ", computed " << *r.computed_total << '\n';
    if (!clean) {
      err << id << ": verification failed\n";
      rc = kFailed;
    }
  }
  return rc;
}

}  // namespace detail

/// Parses and runs one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dice-sum, polygonal and two-equation counting", "dicecount"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"plain", "json", "csv"});

  detail::CountArgs count_args;
  auto* count = app.add_subcommand("count", "Ways n dice with faces 1..m make the sum N");
  count->add_option("--dice", count_args.dice, "number of dice n")->required()->check(CLI::PositiveNumber);
  count->add_option("--faces", count_args.faces, "faces per die m")->required()->check(CLI::PositiveNumber);
  count->add_option("--sum", count_args.sum, "target sum N")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--engine", count_args.engine, "poly|add-die|lambda|closed|all")
      ->check(CLI::IsMember({"poly", "add-die", "lambda", "closed", "all"}));
  count->add_flag("--oracle", count_args.oracle, "cross-check against brute-force enumeration");
  count->add_option("--oracle-budget", count_args.budget, "maximum outcomes the oracle may enumerate");
  count->add_option("--format", count_args.format, "plain|json|csv")->check(formats);

  detail::TableArgs table_args;
  auto* table = app.add_subcommand("table", "Full table of counts for n = 1..n_max, N = 1..N_max");
  table->add_option("--faces", table_args.faces)->required()->check(CLI::PositiveNumber);
  table->add_option("--max-dice", table_args.max_dice)->required()->check(CLI::PositiveNumber);
  table->add_option("--max-sum", table_args.max_sum)->required()->check(CLI::PositiveNumber);
  table->add_option("--format", table_args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  detail::HeteroArgs hetero_args;
  Exponent hetero_sum = 0;
  auto* hetero = app.add_subcommand("hetero", "Sums of a pool of unlike dice");
  hetero->add_option("--die", hetero_args.dice, "lo..hi or a comma list of marks (repeatable)")->required();
  auto* hetero_sum_opt = hetero->add_option("--sum", hetero_sum, "target sum N")->check(CLI::NonNegativeNumber);
  hetero->add_option("--engine", hetero_args.engine, "product|closed|all")
      ->check(CLI::IsMember({"product", "closed", "all"}));
  hetero->add_option("--format", hetero_args.format, "plain|json|csv")->check(formats);

  detail::PolygonalArgs poly_args;
  auto* polygonal = app.add_subcommand("polygonal-check", "Is every N <= B a sum of k m-gonal numbers?");
  polygonal->add_option("--sides", poly_args.sides, "m >= 3")->required();
  polygonal->add_option("--power", poly_args.power, "k")->required()->check(CLI::PositiveNumber);
  polygonal->add_option("--upto", poly_args.upto, "B")->required()->check(CLI::NonNegativeNumber);
  polygonal->add_flag("--unordered", poly_args.unordered, "count multisets instead of ordered tuples");
  polygonal->add_option("--format", poly_args.format, "plain|json")->check(CLI::IsMember({"plain", "json"}));

  detail::VirginsArgs virgins_args;
  std::size_t list_cap = 0;
  auto* virgins = app.add_subcommand("virgins", "Solutions of two simultaneous linear equations");
  virgins->add_option("--gen", virgins_args.gens, "a:alpha (repeatable)")->required();
  virgins->add_option("--targets", virgins_args.targets, "n:nu")->required();
  virgins->add_flag("--positive", virgins_args.positive, "require every unknown >= 1");
  auto* list_opt = virgins->add_option("--list", list_cap, "also print up to this many solutions");
  virgins->add_option("--format", virgins_args.format, "plain|json")->check(CLI::IsMember({"plain", "json"}));

  std::string which = "all";
  auto* verify = app.add_subcommand("verify-paper", "Recompute the historical reference tables");
  verify->add_option("--table", which, "table1|s22|all")->check(CLI::IsMember({"table1", "s22", "all"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*count) return detail::cmd_count(count_args, out, err);
    if (*table) return detail::cmd_table(table_args, out, err);
    if (*hetero) {
      if (*hetero_sum_opt) hetero_args.sum = hetero_sum;
      return detail::cmd_hetero(hetero_args, out, err);
    }
    if (*polygonal) return detail::cmd_polygonal(poly_args, out, err);
    if (*virgins) {
      if (*list_opt) virgins_args.list = list_cap;
      return detail::cmd_virgins(virgins_args, out, err);
    }
    if (*verify) return detail::cmd_verify(which, out, err);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const DivisibilityError& e) {
    err << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace dicecount::cli
