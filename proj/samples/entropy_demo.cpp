// Entropy of the 5-cycle under a few distributions, next to lg chi_f.

#include <cmath>
#include <iostream>

#include "gelab/gelab.hpp"

int main() {
  using namespace gelab;
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto chi = fractional_chromatic_number(c5);
  std::cout << "chi_f(C5) = " << to_string(chi.value) << ", lg chi_f = " << std::log2(to_double(chi.value)) << '\n';

  for (const auto& p : {Distribution::uniform(5), Distribution({Rational(1, 2), Rational(1, 8), Rational(1, 8),
                                                                  Rational(1, 8), Rational(1, 8)})}) {
    auto h = entropy(c5, p);
    auto verdict = is_entropy_maximizer(c5, p);
    std::cout << "H = " << h.value << " (gap " << h.gap << ", " << h.iterations << " iterations), "
              << (verdict.is_maximizer ? "maximiser" : "not a maximiser") << '\n';
  }
}
