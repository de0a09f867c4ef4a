#pragma once

#include <cmath>
#include <optional>

#include "gelab/entropy.hpp"
#include "gelab/errors.hpp"
#include "gelab/fractional.hpp"
#include "gelab/graph.hpp"
#include "gelab/independent_sets.hpp"
#include "gelab/rational.hpp"

namespace gelab {

inline constexpr std::size_t kMaxWeightedFamilyCap = 1'000'000;

enum class MaximizerReason { none, no_uniform_cover };

inline const char* to_string(MaximizerReason r) {
  return r == MaximizerReason::no_uniform_cover ? "NoUniformCover" : "none";
}

struct MaximizerVerdict {
  bool is_maximizer = false;
  Rational chi_f_support = 0;  // chi_f(G[supp P])
  Rational alpha_p = 0;
  std::optional<CoverMultiset> certificate;
  MaximizerReason reason = MaximizerReason::none;
};

struct SymmetryVerdict {
  bool is_symmetric = false;
  Rational chi_f = 0;
  Rational n_over_alpha = 0;
  std::optional<CoverMultiset> certificate;
};

// P maximises H(G, .) on its support exactly when supp(P) is covered
// uniformly by maximum P-weight independent sets. Decided by exact LP
// feasibility over the family of all maximum-weight sets; no floating point.
inline MaximizerVerdict is_entropy_maximizer(const Graph& g, const Distribution& p, EnumerationOptions opts = {}) {
  if (p.size() != g.n()) throw std::invalid_argument("distribution length differs from vertex count");
  MaximizerVerdict verdict;
  verdict.chi_f_support = fractional_chromatic_number(g.induced(p.support()).graph, opts).value;

  auto family = enumerate_maximum_weighted_independent_sets(g, p, opts);
  if (family.size() > kMaxWeightedFamilyCap) {
    throw CapExceeded(family.size(), kMaxWeightedFamilyCap, "maximum-weight independent set family");
  }
  verdict.alpha_p = family.front().weight(p.weights());

  if (auto cover = uniform_cover_feasible(g, family, p.support())) {
    verdict.is_maximizer = true;
    verdict.certificate = integralize_cover(*cover, p.support());
  } else {
    verdict.reason = MaximizerReason::no_uniform_cover;
  }
  return verdict;
}

// Symmetric (uniform P maximises entropy) iff chi_f(G) = n / alpha(G).
inline SymmetryVerdict is_symmetric(const Graph& g, EnumerationOptions opts = {}) {
  if (g.n() == 0) throw std::invalid_argument("is_symmetric needs a nonempty graph");
  SymmetryVerdict verdict;
  verdict.chi_f = fractional_chromatic_number(g, opts).value;
  auto maximum = enumerate_maximum_independent_sets(g, opts);
  verdict.n_over_alpha = Rational(static_cast<long>(g.n()), static_cast<long>(maximum.front().size()));
  verdict.is_symmetric = verdict.chi_f == verdict.n_over_alpha;
  if (verdict.is_symmetric) {
    auto cover = uniform_cover_feasible(g, maximum, g.all());
    if (!cover) throw std::logic_error("chi_f = n/alpha but no uniform cover by maximum independent sets");
    verdict.certificate = integralize_cover(*cover, g.all());
  }
  return verdict;
}

// Numerical cross-check: |H(G,P) - lg chi_f(G[supp P])| <= tol + gap.
template <class W>
bool entropy_equals_log_chi_f(const Graph& g, const BasicDistribution<W>& p, double tol,
                              EnumerationOptions opts = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  EntropyOptions eo;
  eo.tol = std::min(tol, 1e-9);
  eo.enumeration = opts;
  auto h = entropy(g, p, eo);
  double target = std::log2(to_double(fractional_chromatic_number(g.induced(p.support()).graph, opts).value));
  return std::abs(h.value - target) <= tol + h.gap;
}

}  // namespace gelab
