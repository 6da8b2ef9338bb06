// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// All criteria are exact; runtime limits are checked where one is stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dicecount/dicecount.hpp"

using namespace dicecount;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(const Count& c) { return c.str(); }

// 1. Table reproduction through the CLI table command, against the digitized golden data.
Outcome table_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int rc = cli::run({"table", "--faces", "6", "--max-dice", "8", "--max-sum", "36", "--format", "json"}, out, err);
  const double elapsed = seconds_since(t0);
  if (rc != 0) {
    o.fail("table exited " + std::to_string(rc));
    return o;
  }
  const auto j = io::Json::parse(out.str());
  int matched = 0;
  int total = 0;
  for (const auto& e : golden::table1().entries) {
    ++total;
    const std::string computed = j["rows"][e.sum - 1]["counts"][e.dice - 1].get<std::string>();
    if (computed == std::to_string(e.printed)) {
      ++matched;
    } else if (!(e.erratum && computed == std::to_string(e.erratum->corrected) && e.sum == 26 && e.dice == 8 &&
                 computed == "125588")) {
      o.fail("unexpected mismatch at N=" + std::to_string(e.sum) + ", n=" + std::to_string(e.dice));
    }
  }
  if (matched != 287 || total != 288) o.fail(std::to_string(matched) + "/" + std::to_string(total) + " matched");
  if (j["rows"][25]["counts"][7] != "125588") o.fail("(26,8) is not 125588");
  if (elapsed >= 1.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(matched) + "/" + std::to_string(total) + " match, (26,8)=125588, " +
                         std::to_string(elapsed * 1000.0).substr(0, 5) + " ms";
  return o;
}

// 2. Worked examples through all four engines plus the recurrence intermediates.
Outcome worked_examples() {
  Outcome o;
  for (const auto& [sum, expected] : std::vector<std::pair<Exponent, int>>{{25, 2856}, {29, 756}})
    for (auto e : kAllEngines)
      if (count_with(e, {6, 6, sum}) != expected)
        o.fail(engine_name(e) + " gives " + str(count_with(e, {6, 6, sum})) + " at N=" + std::to_string(sum));
  const auto s25 = lambda_recurrence_trace({6, 6, 25}).back();
  if (s25.numerator != 54264 || s25.lambda != 19) o.fail("N=25 step is " + str(s25.numerator) + "/" + std::to_string(s25.lambda));
  const auto s29 = lambda_recurrence_trace({6, 6, 29}).back();
  if (s29.numerator != 17388 || s29.lambda != 23) o.fail("N=29 step is " + str(s29.numerator) + "/" + std::to_string(s29.lambda));
  if (o.pass) o.detail = "2856 = 54264/19, 756 = 17388/23 on all engines";
  return o;
}

// 3. Pool of 6-, 8- and 12-faced dice.
Outcome s22_distribution() {
  Outcome o;
  const std::vector<Exponent> faces{6, 8, 12};
  const DicePool pool({MarkedDie::consecutive(1, 6), MarkedDie::consecutive(1, 8), MarkedDie::consecutive(1, 12)});
  const auto dist = hetero_distribution(pool);
  const auto golden = golden::s22();
  if (dist.size() != golden.entries.size()) o.fail("support size " + std::to_string(dist.size()));
  Count total = 0;
  for (std::size_t i = 0; i < dist.size() && i < golden.entries.size(); ++i) {
    const auto& [sum, c] = dist[i];
    total += c;
    if (sum != golden.entries[i].sum || c != golden.entries[i].printed) o.fail("entry N=" + std::to_string(sum));
    if (hetero_count_closed_form(faces, sum) != c) o.fail("closed form differs at N=" + std::to_string(sum));
  }
  for (Exponent s = 0; s <= 30; ++s)
    if (hetero_count_closed_form(faces, s) != hetero_count_product(pool, s)) o.fail("engines differ at N=" + std::to_string(s));
  if (total != 576) o.fail("total " + str(total));
  if (o.pass) o.detail = "24/24 coefficients, total 576, engines agree";
  return o;
}

// 4 + 6 (sweep part). Engine agreement with the brute-force oracle.
Outcome engine_sweep(std::size_t& divisions) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  for (Exponent n = 1; n <= 5; ++n) {
    for (Exponent m = 1; m <= 8; ++m) {
      const DicePool pool = DicePool::uniform(n, m);
      for (Exponent s = 0; s <= m * n + 2; ++s) {
        ++cases;
        const HomoQuery q{n, m, s};
        const Count expected = oracle::brute_dice(pool, s, 32768);
        for (auto e : kAllEngines) {
          try {
            const Count c = count_with(e, q);
            if (c != expected)
              o.fail(engine_name(e) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " N=" + std::to_string(s));
          } catch (const DivisibilityError& err) {
            o.fail(err.what());
          }
        }
        if (s > n) divisions += static_cast<std::size_t>(s - n);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(cases) + " cases x 4 engines + oracle, " + std::to_string(elapsed).substr(0, 5) + " s";
  return o;
}

// 5. Structural invariants for n <= 8, m in 2..8.
Outcome structural_invariants() {
  Outcome o;
  for (Exponent m = 2; m <= 8; ++m) {
    const CountTable t = count_table_add_die(m, 8, 8 * m + 2);
    for (Exponent n = 1; n <= 8; ++n) {
      Count column = 0;
      for (Exponent s = 0; s <= 8 * m + 2; ++s) {
        const Count c = t.at(s, n);
        column += c;
        const bool inside = s >= n && s <= m * n;
        if (!inside && c != 0) o.fail("nonzero outside support");
        if (inside && c == 0) o.fail("zero inside support");
        if (inside && c != t.at(n + m * n - s, n)) o.fail("symmetry");
        if (c != count_closed_form({n, m, s})) o.fail("closed form differs from table");
        const Exponent lambda = s - n;
        if (lambda >= 0 && lambda < m && c != binomial(n + lambda - 1, lambda)) o.fail("prefix regime");
      }
      if (t.at(n, n) != 1 || t.at(m * n, n) != 1) o.fail("endpoints");
      if (column != boost::multiprecision::pow(Count(m), static_cast<unsigned>(n))) o.fail("column sum");
    }
  }
  if (o.pass) o.detail = "symmetry, support, endpoints, m^n sums, prefix binomials for n<=8, m=2..8";
  return o;
}

// 6. Every division in the lambda recurrence is exact across the sweep and the 6-faced table.
Outcome lambda_divisibility(std::size_t sweep_divisions) {
  Outcome o;
  std::size_t steps = 0;
  try {
    for (Exponent n = 1; n <= 5; ++n)
      for (Exponent m = 1; m <= 8; ++m) steps += lambda_recurrence_trace({n, m, m * n + 2}).size();
    for (Exponent n = 1; n <= 8; ++n) steps += lambda_recurrence_trace({n, 6, 36}).size();
  } catch (const DivisibilityError& e) {
    o.fail(e.what());
  }
  if (o.pass) o.detail = std::to_string(steps) + " trace steps + " + std::to_string(sweep_divisions) + " sweep steps, all exact";
  return o;
}

// 7. Polygonal positivity to 2000, and the three-squares gap at 7.
Outcome polygonal_checks() {
  Outcome o;
  const auto t0 = Clock::now();
  const Exponent upto = 2000;
  auto require_all = [&](Exponent sides, std::uint64_t power) {
    const auto gap = check_all_positive(ordered_representation_counts(sides, power, upto), upto);
    if (gap) o.fail("(" + std::to_string(sides) + "-gonal)^" + std::to_string(power) + " misses " + std::to_string(*gap));
  };
  require_all(3, 3);
  require_all(4, 4);
  for (Exponent m = 3; m <= 8; ++m) require_all(m, static_cast<std::uint64_t>(m));
  const auto gap = check_all_positive(ordered_representation_counts(4, 3, upto), upto);
  if (gap != 7) o.fail("(square series)^3 first gap is not 7");
  if (o.pass) o.detail = "all positive to 2000; squares^3 gap at 7; " + std::to_string(seconds_since(t0)).substr(0, 5) + " s";
  return o;
}

// 8. Two-equation counts against brute force, 200 random systems in both modes.
Outcome regula_virginum() {
  Outcome o;
  std::mt19937_64 rng(20260117);
  auto uni = [&](Exponent lo, Exponent hi) { return std::uniform_int_distribution<Exponent>(lo, hi)(rng); };
  int singular_checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Generator> gens(static_cast<std::size_t>(uni(1, 4)));
    for (auto& g : gens) {
      do g = {uni(0, 5), uni(0, 5)};
      while (g.a == 0 && g.alpha == 0);
    }
    const Exponent n = uni(0, 30);
    const Exponent nu = uni(0, 30);
    for (auto mode : {SolutionMode::Nonnegative, SolutionMode::Positive}) {
      const LinearSystem2 sys(gens, n, nu, mode);
      const Count c = rv_count_solutions(sys);
      if (c != oracle::brute_regula(sys)) o.fail("system " + std::to_string(trial) + " differs from brute force");
      if (gens.size() == 2 && gens[0].a * gens[1].alpha != gens[1].a * gens[0].alpha) {
        ++singular_checked;
        if (c > 1) o.fail("nonsingular pair with " + str(c) + " solutions");
      }
    }
  }
  // dedicated nonsingular pairs
  for (int trial = 0; trial < 200; ++trial) {
    const Generator g1{uni(0, 5), uni(0, 5)};
    const Generator g2{uni(0, 5), uni(0, 5)};
    if (g1.a * g2.alpha == g2.a * g1.alpha) continue;
    for (auto mode : {SolutionMode::Nonnegative, SolutionMode::Positive}) {
      ++singular_checked;
      if (rv_count_solutions(LinearSystem2({g1, g2}, uni(0, 30), uni(0, 30), mode)) > 1) o.fail("nonsingular pair > 1");
    }
  }
  if (o.pass) o.detail = "400 counts match brute force; " + std::to_string(singular_checked) + " nonsingular pairs <= 1";
  return o;
}

// 9. Unordered and ordered views agree on positivity for three triangular numbers.
Outcome ordered_unordered() {
  Outcome o;
  const Exponent upto = 500;
  const IntPoly ordered = ordered_representation_counts(3, 3, upto);
  const BiPoly grid = partition_grid(polygonal_parts({3, upto}), 3, upto);
  for (Exponent s = 0; s <= upto; ++s)
    if ((ordered.coeff(s) > 0) != (grid.at(s, 3) > 0)) o.fail("disagree at N=" + std::to_string(s));
  if (o.pass) o.detail = "N = 0..500 agree";
  return o;
}

}  // namespace

int main() {
  std::size_t sweep_divisions = 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 table reproduction", table_reproduction},
      {"2 worked examples", worked_examples},
      {"3 three-dice pool distribution", s22_distribution},
      {"4 engine agreement sweep", [&] { return engine_sweep(sweep_divisions); }},
      {"5 structural invariants", structural_invariants},
      {"6 lambda-recurrence divisibility", [&] { return lambda_divisibility(sweep_divisions); }},
      {"7 polygonal checks", polygonal_checks},
      {"8 two-equation counting", regula_virginum},
      {"9 unordered/ordered consistency", ordered_unordered},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << '\n';
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
