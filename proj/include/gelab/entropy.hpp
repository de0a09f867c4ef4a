#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/graph.hpp"
#include "gelab/independent_sets.hpp"

namespace gelab {

// A point of the vertex packing polytope together with a convex combination
// of independent-set indicator vectors realising it.
struct PolytopePoint {
  std::vector<double> coords;
  std::vector<std::pair<IndependentSet, double>> decomposition;

  static PolytopePoint from_decomposition(std::size_t n, std::vector<std::pair<IndependentSet, double>> parts) {
    PolytopePoint a{std::vector<double>(n, 0.0), std::move(parts)};
    for (const auto& [set, weight] : a.decomposition) {
      bits::for_each(set.members, [&](Vertex v) { a.coords[v] += weight; });
    }
    return a;
  }
};

struct EntropyResult {
  double value = 0.0;  // bits; an upper bound on H(G,P)
  PolytopePoint minimizer;
  double gap = 0.0;  // H(G,P) >= value - gap
  std::size_t iterations = 0;
  bool converged = true;

  double lower_bound() const { return value - gap; }
};

class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(EntropyResult best)
      : std::runtime_error("Frank-Wolfe stopped with gap " + std::to_string(best.gap) + " after " +
                           std::to_string(best.iterations) + " iterations"),
        best_(std::move(best)) {}

  const EntropyResult& best_so_far() const noexcept { return best_; }

 private:
  EntropyResult best_;
};

struct EntropyOptions {
  double tol = 1e-9;
  std::size_t max_iterations = 1'000'000;
  // Away steps give linear convergence when the minimiser sits on a face of
  // VP(G); plain Frank-Wolfe is kept for comparison.
  bool away_steps = true;
  EnumerationOptions enumeration{};
};

// sum over supp(p) of p_v lg(1/a_v).
template <class W>
double objective(const BasicDistribution<W>& p, std::span<const double> a) {
  if (a.size() != p.size()) throw std::invalid_argument("point dimension differs from distribution");
  double total = 0.0;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (!bits::contains(p.support(), v)) continue;
    if (!(a[v] > 0.0)) throw DomainError("a_" + std::to_string(v) + " = 0 on the support; objective is infinite");
    total -= to_double(p[v]) * std::log2(a[v]);
  }
  return total;
}

template <class W>
double objective(const BasicDistribution<W>& p, const PolytopePoint& a) {
  return objective(p, std::span<const double>(a.coords));
}

// Vertex of VP(G) minimising <gradient, s>: the maximum weighted independent
// set for weights -gradient. An all-zero gradient returns the first maximal
// independent set.
inline IndependentSet linear_minimization_oracle(const Graph& g, std::span<const double> gradient,
                                                 EnumerationOptions opts = {}) {
  if (gradient.size() != g.n()) throw std::invalid_argument("gradient length differs from vertex count");
  std::vector<double> w(gradient.size());
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (gradient[v] > 0.0) throw std::invalid_argument("gradient must be nonpositive");
    w[v] = gradient[v] == 0.0 ? 0.0 : -gradient[v];
  }
  if (positive_support(std::span<const double>(w)) == 0) return enumerate_maximal_independent_sets(g, opts).front();
  return max_weighted_independent_set(g, std::span<const double>(w), opts).witness;
}

namespace detail {

class FrankWolfe {
 public:
  FrankWolfe(const Graph& g, std::vector<double> p, VertexSet support, const EntropyOptions& opts)
      : n_(g.n()),
        p_(std::move(p)),
        support_(bits::to_vector(support)),
        oracle_(enumerate_maximal_independent_sets_within(g, support, opts.enumeration)),
        opts_(opts) {
    initialise(g, support);
  }

  EntropyResult run() {
    std::vector<double> w(n_, 0.0);
    std::size_t t = 0;
    double gap = 0.0;
    for (;; ++t) {
      if (t % kRefreshEvery == 0) refresh();
      for (Vertex v : support_) w[v] = p_[v] / a_[v];
      double inner = 0.0;
      for (Vertex v : support_) inner += w[v] * a_[v];

      std::size_t fw = oracle_.argmax(w);
      double fw_weight = oracle_.family()[fw].weight(std::span<const double>(w));
      gap = (fw_weight - inner) / std::numbers::ln2;
      if (gap <= opts_.tol || t >= opts_.max_iterations) break;

      std::size_t away = atoms_.size();
      double away_gap = -1.0;
      if (opts_.away_steps && atoms_.size() > 1) {
        double lowest = 0.0;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
          double value = atoms_[i].first.weight(std::span<const double>(w));
          if (i == 0 || value < lowest) {
            lowest = value;
            away = i;
          }
        }
        away_gap = (inner - lowest) / std::numbers::ln2;
      }

      if (gap >= away_gap) {
        const VertexSet target = oracle_.family()[fw].members;
        for (Vertex v : support_) d_[v] = (bits::contains(target, v) ? 1.0 : 0.0) - a_[v];
        double step = line_search(1.0, t);
        if (step <= 0.0) break;
        for (auto& atom : atoms_) atom.second *= 1.0 - step;
        add_atom(target, step);
        if (step >= 1.0) atoms_.assign(1, {IndependentSet{target}, 1.0});
      } else {
        const VertexSet source = atoms_[away].first.members;
        double lambda = atoms_[away].second;
        for (Vertex v : support_) d_[v] = a_[v] - (bits::contains(source, v) ? 1.0 : 0.0);
        double max_step = lambda / (1.0 - lambda);
        double step = line_search(max_step, t);
        if (step <= 0.0) break;
        for (auto& atom : atoms_) atom.second *= 1.0 + step;
        if (step >= max_step) {
          atoms_.erase(atoms_.begin() + static_cast<std::ptrdiff_t>(away));
        } else {
          atoms_[away].second -= step;
        }
      }
      for (Vertex v : support_) a_[v] += last_step_ * d_[v];
    }

    refresh();
    for (Vertex v : support_) w[v] = p_[v] / a_[v];
    double inner = 0.0;
    for (Vertex v : support_) inner += w[v] * a_[v];
    std::size_t fw = oracle_.argmax(w);
    gap = std::max(0.0, (oracle_.family()[fw].weight(std::span<const double>(w)) - inner) / std::numbers::ln2);

    EntropyResult result;
    result.minimizer = PolytopePoint::from_decomposition(n_, atoms_);
    result.value = 0.0;
    for (Vertex v : support_) result.value -= p_[v] * std::log2(result.minimizer.coords[v]);
    result.gap = gap;
    result.iterations = t;
    result.converged = gap <= opts_.tol;
    return result;
  }

 private:
  static constexpr std::size_t kRefreshEvery = 64;
  static constexpr int kBisectionSteps = 50;

  // Greedy cover of the support: take a maximal independent set of the
  // uncovered vertices (lowest label first), extend it to a maximal set of
  // G[supp], repeat. The average of the cover is strictly positive on supp.
  void initialise(const Graph& g, VertexSet support) {
    VertexSet remaining = support;
    std::vector<VertexSet> cover;
    while (remaining) {
      VertexSet chosen = 0;
      auto grow = [&](VertexSet pool) {
        bits::for_each(pool, [&](Vertex v) {
          if (!(g.neighbors(v) & chosen)) chosen |= bits::single(v);
        });
      };
      grow(remaining);
      grow(support & ~chosen);
      cover.push_back(chosen);
      remaining &= ~chosen;
    }
    for (VertexSet s : cover) atoms_.emplace_back(IndependentSet{s}, 1.0 / static_cast<double>(cover.size()));
    a_.assign(n_, 0.0);
    d_.assign(n_, 0.0);
  }

  void add_atom(VertexSet s, double weight) {
    for (auto& atom : atoms_) {
      if (atom.first.members == s) {
        atom.second += weight;
        return;
      }
    }
    atoms_.emplace_back(IndependentSet{s}, weight);
  }

  // Renormalise the convex weights and recompute a from them, shedding drift.
  void refresh() {
    std::erase_if(atoms_, [](const auto& atom) { return !(atom.second > 0.0); });
    double total = 0.0;
    for (const auto& atom : atoms_) total += atom.second;
    for (auto& atom : atoms_) atom.second /= total;
    std::fill(a_.begin(), a_.end(), 0.0);
    for (const auto& [set, weight] : atoms_) bits::for_each(set.members, [&](Vertex v) { a_[v] += weight; });
  }

  // Derivative (up to the positive factor 1/ln 2) of gamma -> f(a + gamma d).
  double slope(double gamma) const {
    double s = 0.0;
    for (Vertex v : support_) {
      double x = a_[v] + gamma * d_[v];
      if (!(x > 0.0)) return d_[v] < 0.0 ? std::numeric_limits<double>::infinity() : s;
      s -= p_[v] * d_[v] / x;
    }
    return s;
  }

  double value_along(double gamma) const {
    double f = 0.0;
    for (Vertex v : support_) {
      double x = a_[v] + gamma * d_[v];
      if (!(x > 0.0)) return std::numeric_limits<double>::infinity();
      f -= p_[v] * std::log2(x);
    }
    return f;
  }

  // Exact line search on [0, max_step] by bisection on the derivative. When
  // the derivative fails to bracket a root, fall back to 2/(t+2) if it
  // decreases the objective.
  double line_search(double max_step, std::size_t t) {
    double lo = 0.0;
    double hi = max_step;
    if (slope(hi) <= 0.0) return last_step_ = hi;
    if (slope(lo) >= 0.0) {
      double fallback = std::min(max_step, 2.0 / (static_cast<double>(t) + 2.0));
      return last_step_ = value_along(fallback) < value_along(0.0) ? fallback : 0.0;
    }
    for (int i = 0; i < kBisectionSteps; ++i) {
      double mid = 0.5 * (lo + hi);
      (slope(mid) < 0.0 ? lo : hi) = mid;
    }
    return last_step_ = 0.5 * (lo + hi);
  }

  std::size_t n_;
  std::vector<double> p_;
  std::vector<Vertex> support_;
  SetFamilyOracle oracle_;
  EntropyOptions opts_;
  std::vector<std::pair<IndependentSet, double>> atoms_;
  std::vector<double> a_;
  std::vector<double> d_;
  double last_step_ = 0.0;
};

}  // namespace detail

// H(G,P) = min over a in VP(G) of sum_v p_v lg(1/a_v), by Frank-Wolfe with
// the maximum weighted independent set as linear oracle. Only G[supp(P)]
// matters: the decomposition uses independent sets inside the support and
// coordinates off the support stay at zero.
template <class W>
EntropyResult entropy(const Graph& g, const BasicDistribution<W>& p, const EntropyOptions& opts) {
  if (p.size() != g.n()) throw std::invalid_argument("distribution length differs from vertex count");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!p.support()) throw InvalidDistribution("empty support");
  auto result = detail::FrankWolfe(g, p.as_doubles(), p.support(), opts).run();
  if (!result.converged) throw NonConvergence(std::move(result));
  return result;
}

template <class W>
EntropyResult entropy(const Graph& g, const BasicDistribution<W>& p, double tol = 1e-9) {
  EntropyOptions opts;
  opts.tol = tol;
  return entropy(g, p, opts);
}

}  // namespace gelab
