#pragma once

/**
 * @file series.hpp
 * @brief Dense univariate and bivariate polynomials over exact integers.
 *
 * IntPoly stores coeffs[e] = coefficient of x^e. A polynomial is either
 * untruncated (an exact polynomial) or truncated at an inclusive bound, in
 * which case it stands for a power series known only up to x^bound.
 *
 * Two truncated values with different bounds never combine: the caller has
 * to truncate explicitly first.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "count.hpp"

namespace dicecount {

class IntPoly {
 public:
  IntPoly() = default;

  IntPoly(std::initializer_list<Count> cs, std::optional<Exponent> bound = std::nullopt)
      : IntPoly(std::vector<Count>(cs), bound) {}

  explicit IntPoly(std::vector<Count> cs, std::optional<Exponent> bound = std::nullopt)
      : coeffs_(std::move(cs)), bound_(bound) {
    if (bound_ && *bound_ < 0) throw std::invalid_argument("IntPoly: negative bound");
    canonicalize();
  }

  /// x^e with coefficient c.
  static IntPoly monomial(Exponent e, Count c = 1) {
    if (e < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
    std::vector<Count> cs(static_cast<std::size_t>(e) + 1);
    cs.back() = std::move(c);
    return IntPoly(std::move(cs));
  }

  /// x^lo + x^(lo+1) + ... + x^hi.
  static IntPoly range(Exponent lo, Exponent hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("IntPoly::range: bad range");
    std::vector<Count> cs(static_cast<std::size_t>(hi) + 1);
    for (Exponent e = lo; e <= hi; ++e) cs[static_cast<std::size_t>(e)] = 1;
    return IntPoly(std::move(cs));
  }

  const std::vector<Count>& coeffs() const noexcept { return coeffs_; }
  std::optional<Exponent> bound() const noexcept { return bound_; }
  bool truncated() const noexcept { return bound_.has_value(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the stored part; -1 for zero.
  Exponent degree() const noexcept { return static_cast<Exponent>(coeffs_.size()) - 1; }

  /// Coefficient at e; zero outside the stored range (including e < 0).
  Count coeff(Exponent e) const {
    if (e < 0 || e >= static_cast<Exponent>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(e)];
  }

  /// Same series, cut to the inclusive bound b.
  IntPoly truncate(Exponent b) const {
    if (bound_ && b > *bound_)
      throw std::invalid_argument("IntPoly::truncate: cannot raise an existing bound");
    std::vector<Count> cs(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                static_cast<std::ptrdiff_t>(b) + 1));
    return IntPoly(std::move(cs), b);
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? "," : "") << p.coeffs_[i];
    os << ']';
    if (p.bound_) os << " + O(x^" << (*p.bound_ + 1) << ')';
    return os;
  }

 private:
  void canonicalize() {
    if (bound_ && static_cast<Exponent>(coeffs_.size()) > *bound_ + 1)
      coeffs_.resize(static_cast<std::size_t>(*bound_) + 1);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Count> coeffs_;
  std::optional<Exponent> bound_;
};

namespace detail {

// Common bound of two operands plus an optional explicit request.
inline std::optional<Exponent> merge_bounds(const IntPoly& a, const IntPoly& b,
                                            std::optional<Exponent> requested) {
  std::optional<Exponent> carried;
  if (a.bound() && b.bound()) {
    if (*a.bound() != *b.bound())
      throw std::invalid_argument("series: operands truncated at different bounds");
    carried = a.bound();
  } else {
    carried = a.bound() ? a.bound() : b.bound();
  }
  if (requested) {
    if (*requested < 0) throw std::invalid_argument("series: negative bound");
    if (carried && *requested > *carried)
      throw std::invalid_argument("series: requested bound exceeds operand bound");
    return requested;
  }
  return carried;
}

}  // namespace detail

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  auto bound = detail::merge_bounds(a, b, std::nullopt);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Count> out(std::max(ac.size(), bc.size()));
  for (std::size_t i = 0; i < ac.size(); ++i) out[i] += ac[i];
  for (std::size_t i = 0; i < bc.size(); ++i) out[i] += bc[i];
  return IntPoly(std::move(out), bound);
}

inline IntPoly poly_neg(const IntPoly& a) {
  std::vector<Count> out(a.coeffs());
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out), a.bound());
}

inline IntPoly poly_sub(const IntPoly& a, const IntPoly& b) { return poly_add(a, poly_neg(b)); }

/// Schoolbook convolution, skipping zero coefficients of the left operand.
inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b,
                        std::optional<Exponent> bound = std::nullopt) {
  bound = detail::merge_bounds(a, b, bound);
  if (a.is_zero() || b.is_zero()) return IntPoly({}, bound);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::size_t len = ac.size() + bc.size() - 1;
  if (bound) len = std::min(len, static_cast<std::size_t>(*bound) + 1);
  std::vector<Count> out(len);
  for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
    if (ac[i] == 0) continue;
    const std::size_t jmax = std::min(bc.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (bc[j] == 0) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return IntPoly(std::move(out), bound);
}

/// base^k by binary exponentiation; k = 0 gives the constant 1.
inline IntPoly poly_pow(const IntPoly& base, std::uint64_t k,
                        std::optional<Exponent> bound = std::nullopt) {
  if (!bound) bound = base.bound();
  IntPoly result({Count(1)}, bound);
  if (k == 0) return result;
  IntPoly sq = bound ? base.truncate(*bound) : base;
  while (true) {
    if (k & 1U) result = poly_mul(result, sq, bound);
    k >>= 1U;
    if (k == 0) break;
    sq = poly_mul(sq, sq, bound);
  }
  return result;
}

/// (1 - x)^k as an exact polynomial.
inline IntPoly one_minus_x_pow(std::uint64_t k) { return poly_pow(IntPoly{1, -1}, k); }

/// num / (1 - x)^k up to x^bound, by k rounds of running prefix sums.
inline IntPoly divide_by_one_minus_x_pow(const IntPoly& num, std::uint64_t k, Exponent bound) {
  if (bound < 0) throw std::invalid_argument("divide_by_one_minus_x_pow: negative bound");
  if (num.bound() && *num.bound() < bound)
    throw std::invalid_argument("divide_by_one_minus_x_pow: numerator known only to a lower bound");
  std::vector<Count> acc(static_cast<std::size_t>(bound) + 1);
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = num.coeff(static_cast<Exponent>(i));
  for (std::uint64_t round = 0; round < k; ++round)
    for (std::size_t i = 1; i < acc.size(); ++i) acc[i] += acc[i - 1];
  return IntPoly(std::move(acc), bound);
}

inline Count coeff(const IntPoly& p, Exponent e) { return p.coeff(e); }

/// Dense bivariate grid, truncated at inclusive bounds in both variables.
class BiPoly {
 public:
  BiPoly(Exponent bound_x, Exponent bound_y) : bound_x_(bound_x), bound_y_(bound_y) {
    if (bound_x < 0 || bound_y < 0) throw std::invalid_argument("BiPoly: negative bound");
    grid_.assign(static_cast<std::size_t>((bound_x + 1) * (bound_y + 1)), Count(0));
  }

  Exponent bound_x() const noexcept { return bound_x_; }
  Exponent bound_y() const noexcept { return bound_y_; }

  Count& at(Exponent ex, Exponent ey) { return grid_[index(ex, ey)]; }
  const Count& at(Exponent ex, Exponent ey) const { return grid_[index(ex, ey)]; }

  /// Coefficient with zero outside the grid.
  Count coeff(Exponent ex, Exponent ey) const {
    if (ex < 0 || ey < 0 || ex > bound_x_ || ey > bound_y_) return 0;
    return at(ex, ey);
  }

  /// Multiply in place by 1 / (1 - x^dx y^dy), truncated to the grid.
  void divide_by_one_minus(Exponent dx, Exponent dy) {
    if (dx < 0 || dy < 0 || (dx == 0 && dy == 0))
      throw std::invalid_argument("BiPoly: factor 1/(1 - x^dx y^dy) needs (dx,dy) > (0,0)");
    // Ascending scan makes each cell see already-updated predecessors,
    // which accumulates the whole geometric series.
    for (Exponent ex = dx; ex <= bound_x_; ++ex)
      for (Exponent ey = dy; ey <= bound_y_; ++ey) at(ex, ey) += at(ex - dx, ey - dy);
  }

  /// Coefficient of y^ey as a univariate polynomial in x.
  IntPoly slice_y(Exponent ey) const {
    std::vector<Count> cs(static_cast<std::size_t>(bound_x_) + 1);
    for (Exponent ex = 0; ex <= bound_x_; ++ex) cs[static_cast<std::size_t>(ex)] = at(ex, ey);
    return IntPoly(std::move(cs), bound_x_);
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::size_t index(Exponent ex, Exponent ey) const {
    if (ex < 0 || ey < 0 || ex > bound_x_ || ey > bound_y_)
      throw std::out_of_range("BiPoly: index outside grid");
    return static_cast<std::size_t>(ex * (bound_y_ + 1) + ey);
  }

  Exponent bound_x_;
  Exponent bound_y_;
  std::vector<Count> grid_;
};

}  // namespace dicecount
