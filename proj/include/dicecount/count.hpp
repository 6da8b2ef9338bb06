#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dicecount {

/// Exact signed integer used for every coefficient and count.
using Count = boost::multiprecision::cpp_int;

/// Exponents and small nonnegative parameters (dice, faces, sums).
using Exponent = std::int64_t;

inline std::string to_string(const Count& c) { return c.str(); }

/// A recurrence step left a nonzero remainder. Never expected on valid input.
class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force enumeration would exceed its outcome budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicecount
