// Prints the sum distribution of three six-faced dice two ways and the
// same pool as a product of generating polynomials.

#include <iostream>

#include "dicecount/dicecount.hpp"

int main() {
  using namespace dicecount;
  const Exponent n = 3;
  const Exponent m = 6;
  for (Exponent sum = n; sum <= n * m; ++sum) {
    const HomoQuery q{n, m, sum};
    std::cout << sum << '\t' << count_closed_form(q) << '\t' << count_lambda_recurrence(q) << '\n';
  }

  const DicePool pool({MarkedDie::consecutive(1, 6), MarkedDie::consecutive(1, 8), MarkedDie::consecutive(1, 12)});
  Count total = 0;
  for (const auto& [sum, c] : hetero_distribution(pool)) total += c;
  std::cout << "d6 + d8 + d12 outcomes: " << total << '\n';
}
