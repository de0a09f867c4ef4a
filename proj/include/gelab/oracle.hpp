#pragma once

// Exhaustive and deliberately naive reference routines. They share no code
// path with the enumeration, Frank-Wolfe or simplex implementations they are
// used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/fractional.hpp"
#include "gelab/graph.hpp"
#include "gelab/rational.hpp"

namespace gelab::oracle {

inline constexpr std::size_t kBruteCap = 20;
inline constexpr std::size_t kBruteEntropyCap = 10;

namespace detail {

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(n, cap, "brute-force oracle");
}

inline bool independent(const Graph& g, VertexSet s) {
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!((s >> u) & 1U)) continue;
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (((s >> v) & 1U) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace detail

// Every independent subset of `within` (default: all vertices), by scanning all 2^n masks.
inline std::vector<VertexSet> independent_sets(const Graph& g, VertexSet within = ~VertexSet{0}) {
  detail::check_cap(g.n(), kBruteCap);
  within &= bits::first_n(g.n());
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s < (VertexSet{1} << g.n()); ++s) {
    if ((s & ~within) == 0 && detail::independent(g, s)) out.push_back(s);
  }
  return out;
}

// Independent subsets of `within` that no vertex of `within` can extend.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within = ~VertexSet{0}) {
  within &= bits::first_n(g.n());
  std::vector<VertexSet> out;
  for (VertexSet s : independent_sets(g, within)) {
    bool maximal = true;
    for (Vertex v = 0; v < g.n() && maximal; ++v) {
      if (((within >> v) & 1U) && !((s >> v) & 1U) && detail::independent(g, s | (VertexSet{1} << v))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline std::size_t brute_alpha(const Graph& g) {
  std::size_t best = 0;
  for (VertexSet s : independent_sets(g)) best = std::max<std::size_t>(best, bits::count(s));
  return best;
}

template <class W>
W brute_max_weight(const Graph& g, const std::vector<W>& w) {
  W best{0};
  for (VertexSet s : independent_sets(g)) {
    W total{0};
    for (Vertex v = 0; v < g.n(); ++v) {
      if ((s >> v) & 1U) total += w[v];
    }
    best = std::max(best, total);
  }
  return best;
}

// Entropy upper bound from the best of several projected-gradient runs on the
// convex-combination weights over every maximal independent set of
// G[supp(P)]. Accelerated steps with backtracking and function-value restart;
// each run stops once the gradient-mapping norm drops below `precision`.
class BruteEntropy {
 public:
  BruteEntropy(const Graph& g, const std::vector<double>& p, VertexSet support) : p_(p) {
    detail::check_cap(g.n(), kBruteEntropyCap);
    for (Vertex v = 0; v < g.n(); ++v) {
      if ((support >> v) & 1U) support_.push_back(v);
    }
    for (VertexSet s : maximal_independent_sets(g, support)) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < support_.size(); ++i) {
        if ((s >> support_[i]) & 1U) members.push_back(i);
      }
      sets_.push_back(std::move(members));
    }
  }

  double run(double precision, unsigned seed, std::size_t max_iterations) const {
    const std::size_t k = sets_.size();
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> x(k);
    double mass = 0.0;
    for (auto& xi : x) mass += (xi = expo(rng));
    for (auto& xi : x) xi /= mass;

    std::vector<double> y = x, x_prev = x, grad(k), trial(k);
    double t = 1.0;
    double lipschitz = 1.0;
    double fx = value(x);
    for (std::size_t it = 0; it < max_iterations; ++it) {
      double fy = value(y);
      if (!std::isfinite(fy)) {
        y = x;
        t = 1.0;
        fy = fx;
      }
      gradient(y, grad);
      double f_trial = 0.0;
      bool accepted = false;
      for (int doubling = 0; doubling < 200; ++doubling) {
        for (std::size_t i = 0; i < k; ++i) trial[i] = y[i] - grad[i] / lipschitz;
        project(trial);
        f_trial = value(trial);
        double model = fy;
        double dist2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
          double d = trial[i] - y[i];
          model += grad[i] * d;
          dist2 += d * d;
        }
        model += 0.5 * lipschitz * dist2;
        if (std::isfinite(f_trial) && f_trial <= model + 1e-15 * std::abs(model)) {
          accepted = true;
          break;
        }
        lipschitz *= 2.0;
      }
      if (!accepted) {
        // The extrapolated point projects onto the boundary; retreat to x.
        if (t == 1.0) break;
        y = x;
        t = 1.0;
        lipschitz = 1.0;
        continue;
      }

      double mapping = 0.0;
      for (std::size_t i = 0; i < k; ++i) mapping += (trial[i] - y[i]) * (trial[i] - y[i]);
      mapping = lipschitz * std::sqrt(mapping);

      if (f_trial > fx) {
        if (t == 1.0) break;  // a plain step from x made no progress
        y = x;  // restart momentum
        t = 1.0;
        continue;
      }
      x_prev = x;
      x = trial;
      fx = f_trial;
      if (mapping <= precision) break;

      double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      for (std::size_t i = 0; i < k; ++i) y[i] = x[i] + ((t - 1.0) / t_next) * (x[i] - x_prev[i]);
      t = t_next;
      lipschitz *= 0.9;
    }
    return fx;
  }

 private:
  std::vector<double> point(const std::vector<double>& lambda) const {
    std::vector<double> a(support_.size(), 0.0);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      for (std::size_t j : sets_[i]) a[j] += lambda[i];
    }
    return a;
  }

  double value(const std::vector<double>& lambda) const {
    auto a = point(lambda);
    double f = 0.0;
    for (std::size_t j = 0; j < support_.size(); ++j) {
      if (!(a[j] > 0.0)) return std::numeric_limits<double>::infinity();
      f -= p_[support_[j]] * std::log2(a[j]);
    }
    return f;
  }

  void gradient(const std::vector<double>& lambda, std::vector<double>& g) const {
    auto a = point(lambda);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      g[i] = 0.0;
      for (std::size_t j : sets_[i]) g[i] -= p_[support_[j]] / (a[j] * std::numbers::ln2);
    }
  }

  // Euclidean projection onto the probability simplex (sort and threshold).
  static void project(std::vector<double>& v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      cumulative += u[i];
      double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
      if (u[i] - candidate > 0.0) theta = candidate;
    }
    for (auto& x : v) x = std::max(0.0, x - theta);
  }

  std::vector<double> p_;
  std::vector<Vertex> support_;
  std::vector<std::vector<std::size_t>> sets_;
};

template <class W>
double brute_entropy(const Graph& g, const BasicDistribution<W>& p, double precision = 1e-10, unsigned seed = 0,
                     std::size_t max_iterations = 2'000'000) {
  if (p.size() != g.n()) throw std::invalid_argument("distribution length differs from vertex count");
  BruteEntropy solver(g, p.as_doubles(), p.support());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned s = seed; s < seed + 5; ++s) best = std::min(best, solver.run(precision, s, max_iterations));
  return best;
}

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> reasons;

  void fail(std::string why) {
    ok = false;
    reasons.push_back(std::move(why));
  }
};

// Maximiser certificate conditions, rechecked from scratch: every set is
// independent, has P-weight equal to the exhaustive maximum, and every
// support vertex lies in the same positive number of sets.
inline CertificateCheck verify_certificate(const Graph& g, const Distribution& p, const CoverMultiset& cm) {
  CertificateCheck check;
  if (p.size() != g.n()) {
    check.fail("distribution length differs from vertex count");
    return check;
  }
  std::vector<Rational> w(p.weights().begin(), p.weights().end());
  Rational best = brute_max_weight(g, w);
  for (const auto& [set, m] : cm.multiplicities) {
    if (m <= 0) check.fail("nonpositive multiplicity on " + to_string(set));
    if (!detail::independent(g, set.members)) check.fail(to_string(set) + " is not independent");
    Rational weight = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if ((set.members >> v) & 1U) weight += w[v];
    }
    if (weight != best) check.fail(to_string(set) + " has weight " + to_string(weight) + ", maximum is " + to_string(best));
  }
  BigInt fold = -1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (p[v] == 0) continue;
    BigInt count = 0;
    for (const auto& [set, m] : cm.multiplicities) {
      if ((set.members >> v) & 1U) count += m;
    }
    if (count == 0) check.fail("support vertex " + std::to_string(v) + " is not covered");
    if (fold < 0) fold = count;
    else if (count != fold) check.fail("vertex " + std::to_string(v) + " covered " + count.str() + " times, others " + fold.str());
  }
  if (fold >= 0 && cm.fold != fold) check.fail("declared fold " + cm.fold.str() + " differs from counted " + fold.str());
  return check;
}

// Weak-duality certificate for chi_f: the colouring covers every vertex at
// least once with independent sets, the clique weights respect every
// independent set (all 2^n checked), and both totals equal `value`.
inline CertificateCheck verify_chromatic_certificate(const Graph& g, const Rational& value, const FractionalColoring& fc,
                                                     const std::vector<Rational>& clique) {
  CertificateCheck check;
  Rational total = 0;
  for (const auto& [set, w] : fc.weights) {
    if (w < 0) check.fail("negative weight on " + to_string(set));
    if (!detail::independent(g, set.members)) check.fail(to_string(set) + " is not independent");
    total += w;
  }
  if (total != value) check.fail("colouring total " + to_string(total) + " differs from " + to_string(value));
  for (Vertex v = 0; v < g.n(); ++v) {
    Rational c = 0;
    for (const auto& [set, w] : fc.weights) {
      if ((set.members >> v) & 1U) c += w;
    }
    if (c < 1) check.fail("vertex " + std::to_string(v) + " covered only " + to_string(c));
  }
  if (clique.size() != g.n()) {
    check.fail("clique vector has wrong length");
    return check;
  }
  Rational clique_total = 0;
  for (const auto& x : clique) {
    if (x < 0) check.fail("negative clique weight");
    clique_total += x;
  }
  if (clique_total != value) check.fail("clique total " + to_string(clique_total) + " differs from " + to_string(value));
  for (VertexSet s : independent_sets(g)) {
    Rational load = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if ((s >> v) & 1U) load += clique[v];
    }
    if (load > 1) check.fail("independent set " + to_string(IndependentSet{s}) + " carries clique weight " + to_string(load));
  }
  return check;
}

}  // namespace gelab::oracle
