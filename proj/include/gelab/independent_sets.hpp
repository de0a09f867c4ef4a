#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/graph.hpp"
#include "gelab/rational.hpp"

namespace gelab {

inline constexpr std::size_t kDefaultEnumerationCap = 40;

struct EnumerationOptions {
  // Largest vertex count accepted by the exhaustive routines. Never above 64.
  std::size_t vertex_cap = kDefaultEnumerationCap;
};

template <class W>
struct WeightedAlpha {
  W value{};
  IndependentSet witness;
};

namespace detail {

inline void check_cap(const Graph& g, const EnumerationOptions& opts) {
  if (g.n() > opts.vertex_cap) throw CapExceeded(g.n(), opts.vertex_cap, "independent-set enumeration");
}

// Bron-Kerbosch on the complement: a clique of the complement is an
// independent set of g. Pivot on the vertex of P u X with the fewest
// g-neighbours inside P (lowest label on ties).
class MaximalSetEnumerator {
 public:
  explicit MaximalSetEnumerator(const Graph& g) : g_(g), all_(g.all()) {}

  std::vector<IndependentSet> run() {
    out_.clear();
    if (g_.n() == 0) {
      out_.push_back({});
      return out_;
    }
    expand(0, all_, 0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  VertexSet non_neighbors(Vertex v) const { return all_ & ~g_.neighbors(v) & ~bits::single(v); }

  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (!p && !x) {
      out_.push_back({r});
      return;
    }
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    bits::for_each(p | x, [&](Vertex u) {
      std::size_t reach = bits::count(p & non_neighbors(u));
      if (!have_pivot || reach > best) {
        pivot = u;
        best = reach;
        have_pivot = true;
      }
    });
    VertexSet branch = p & ~non_neighbors(pivot);
    for (; branch; branch &= branch - 1) {
      Vertex v = bits::lowest(branch);
      VertexSet keep = non_neighbors(v);
      expand(r | bits::single(v), p & keep, x & keep);
      p &= ~bits::single(v);
      x |= bits::single(v);
    }
  }

  const Graph& g_;
  VertexSet all_;
  std::vector<IndependentSet> out_;
};

template <class W>
bool positive(const W& w) {
  return w > 0;
}

}  // namespace detail

// Every inclusion-maximal independent set exactly once, in lexicographic order
// of the sorted member lists. The graph on zero vertices has one: the empty set.
inline std::vector<IndependentSet> enumerate_maximal_independent_sets(const Graph& g, EnumerationOptions opts = {}) {
  detail::check_cap(g, opts);
  return detail::MaximalSetEnumerator(g).run();
}

// Maximal independent sets of the subgraph induced by `within`, in original labels.
inline std::vector<IndependentSet> enumerate_maximal_independent_sets_within(const Graph& g, VertexSet within,
                                                                            EnumerationOptions opts = {}) {
  detail::check_cap(g, opts);
  auto induced = g.induced(within);
  auto local = detail::MaximalSetEnumerator(induced.graph).run();
  // lift is monotone in labels, so lexicographic order survives.
  for (auto& s : local) s.members = induced.lift(s.members);
  return local;
}

// Maximum cardinality; value is the cardinality alpha(G).
inline WeightedAlpha<std::size_t> alpha(const Graph& g, EnumerationOptions opts = {}) {
  WeightedAlpha<std::size_t> best;
  for (const auto& s : enumerate_maximal_independent_sets(g, opts)) {
    if (s.size() > best.value) best = {s.size(), s};
  }
  return best;
}

// Maximum-size independent sets, lexicographic order.
inline std::vector<IndependentSet> enumerate_maximum_independent_sets(const Graph& g, EnumerationOptions opts = {}) {
  auto sets = enumerate_maximal_independent_sets(g, opts);
  std::size_t a = 0;
  for (const auto& s : sets) a = std::max(a, s.size());
  std::erase_if(sets, [&](const IndependentSet& s) { return s.size() != a; });
  return sets;
}

template <class W>
VertexSet positive_support(std::span<const W> w) {
  VertexSet s = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (w[v] < 0) throw std::invalid_argument("negative vertex weight");
    if (detail::positive(w[v])) s |= bits::single(v);
  }
  return s;
}

// Maximises over maximal independent sets of the subgraph induced by the
// positive-weight vertices; the witness lies inside that support. Ties go to
// the first set in enumeration order. All-zero weights give value 0 and the
// empty witness.
template <class W>
WeightedAlpha<W> max_weighted_independent_set(const Graph& g, std::span<const W> w, EnumerationOptions opts = {}) {
  if (w.size() != g.n()) throw std::invalid_argument("weight vector length differs from vertex count");
  VertexSet support = positive_support(w);
  WeightedAlpha<W> best{W(0), {}};
  if (!support) return best;
  bool first = true;
  for (const auto& s : enumerate_maximal_independent_sets_within(g, support, opts)) {
    W value = s.weight(w);
    if (first || value > best.value) {
      best = {value, s};
      first = false;
    }
  }
  return best;
}

template <class W>
WeightedAlpha<W> max_weighted_independent_set(const Graph& g, const std::vector<W>& w, EnumerationOptions opts = {}) {
  return max_weighted_independent_set(g, std::span<const W>(w), opts);
}

// Independent sets of largest P-weight, canonicalised to supp(P): members
// outside the support carry zero weight and are dropped, so each set is a
// maximal independent set of G[supp(P)]. Lexicographic order.
inline std::vector<IndependentSet> enumerate_maximum_weighted_independent_sets(const Graph& g, const Distribution& p,
                                                                               EnumerationOptions opts = {}) {
  if (p.size() != g.n()) throw std::invalid_argument("distribution length differs from vertex count");
  auto sets = enumerate_maximal_independent_sets_within(g, p.support(), opts);
  Rational best = 0;
  std::vector<Rational> weights;
  weights.reserve(sets.size());
  for (const auto& s : sets) {
    weights.push_back(s.weight(p.weights()));
    best = std::max(best, weights.back());
  }
  std::vector<IndependentSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (weights[i] == best) out.push_back(sets[i]);
  }
  return out;
}

// A precomputed family of candidate sets answering repeated linear
// maximisation queries; used as the Frank-Wolfe oracle.
class SetFamilyOracle {
 public:
  explicit SetFamilyOracle(std::vector<IndependentSet> family) : family_(std::move(family)) {}

  std::span<const IndependentSet> family() const noexcept { return family_; }

  // Index of the first set with the largest weight sum.
  std::size_t argmax(std::span<const double> w) const {
    std::size_t best = 0;
    double best_value = 0.0;
    for (std::size_t i = 0; i < family_.size(); ++i) {
      double value = family_[i].weight(w);
      if (i == 0 || value > best_value) {
        best = i;
        best_value = value;
      }
    }
    return best;
  }

 private:
  std::vector<IndependentSet> family_;
};

}  // namespace gelab
