#pragma once

// Two simultaneous linear equations over the integers:
//   a_1 p_1 + a_2 p_2 + ... = n
//   alpha_1 p_1 + alpha_2 p_2 + ... = nu
// Solutions are counted as the coefficient of x^n y^nu in
// prod_i 1 / (1 - x^{a_i} y^{alpha_i}).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "count.hpp"
#include "series.hpp"

namespace dicecount {

struct Generator {
  Exponent a;      // weight in the first equation
  Exponent alpha;  // weight in the second equation

  friend bool operator==(const Generator&, const Generator&) = default;
};

enum class SolutionMode { Nonnegative, Positive };

class LinearSystem2 {
 public:
  LinearSystem2(std::vector<Generator> generators, Exponent n, Exponent nu,
                SolutionMode mode = SolutionMode::Nonnegative)
      : generators_(std::move(generators)), n_(n), nu_(nu), mode_(mode) {
    if (generators_.empty()) throw std::invalid_argument("LinearSystem2: need at least one generator");
    for (const auto& g : generators_) {
      if (g.a < 0 || g.alpha < 0)
        throw std::invalid_argument("LinearSystem2: generator weights must be >= 0");
      if (g.a == 0 && g.alpha == 0)
        throw std::invalid_argument("LinearSystem2: generator (0,0) has infinitely many solutions");
    }
    if (n_ < 0 || nu_ < 0) throw std::invalid_argument("LinearSystem2: targets must be >= 0");
  }

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  Exponent n() const noexcept { return n_; }
  Exponent nu() const noexcept { return nu_; }
  SolutionMode mode() const noexcept { return mode_; }

  /// Targets after substituting p_i = 1 + q_i in positive mode; may be negative.
  std::pair<Exponent, Exponent> reduced_targets() const {
    if (mode_ == SolutionMode::Nonnegative) return {n_, nu_};
    Exponent sa = 0;
    Exponent salpha = 0;
    for (const auto& g : generators_) {
      sa += g.a;
      salpha += g.alpha;
    }
    return {n_ - sa, nu_ - salpha};
  }

 private:
  std::vector<Generator> generators_;
  Exponent n_;
  Exponent nu_;
  SolutionMode mode_;
};

inline Count rv_count_solutions(const LinearSystem2& sys) {
  auto [n, nu] = sys.reduced_targets();
  if (n < 0 || nu < 0) return 0;
  BiPoly ways(n, nu);
  ways.at(0, 0) = 1;
  for (const auto& g : sys.generators()) ways.divide_by_one_minus(g.a, g.alpha);
  return ways.at(n, nu);
}

struct SolutionList {
  std::vector<std::vector<Exponent>> solutions;  // one value per generator
  bool truncated = false;
};

/// Explicit solutions in lexicographic order, at most `cap` of them.
inline SolutionList rv_enumerate_solutions(const LinearSystem2& sys, std::size_t cap) {
  SolutionList out;
  auto [n, nu] = sys.reduced_targets();
  if (n < 0 || nu < 0) return out;
  const auto& gens = sys.generators();
  const Exponent offset = sys.mode() == SolutionMode::Positive ? 1 : 0;
  std::vector<Exponent> current(gens.size());

  // returns false once the cap is hit
  auto recurse = [&](auto&& self, std::size_t i, Exponent rem_n, Exponent rem_nu) -> bool {
    if (i == gens.size()) {
      if (rem_n != 0 || rem_nu != 0) return true;
      if (out.solutions.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.solutions.push_back(current);
      return true;
    }
    const auto& g = gens[i];
    for (Exponent q = 0; q * g.a <= rem_n && q * g.alpha <= rem_nu; ++q) {
      current[i] = q + offset;
      if (!self(self, i + 1, rem_n - q * g.a, rem_nu - q * g.alpha)) return false;
    }
    return true;
  };
  recurse(recurse, 0, n, nu);
  return out;
}

}  // namespace dicecount
