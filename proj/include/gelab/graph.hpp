#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/rational.hpp"

namespace gelab {

using Vertex = std::size_t;

// Vertex subsets are 64-bit masks; bit v set means v is a member.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

namespace bits {

constexpr VertexSet single(Vertex v) { return VertexSet{1} << v; }
constexpr VertexSet first_n(std::size_t n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr std::size_t count(VertexSet s) { return static_cast<std::size_t>(std::popcount(s)); }
constexpr Vertex lowest(VertexSet s) { return static_cast<Vertex>(std::countr_zero(s)); }

inline std::vector<Vertex> to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(count(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

template <class Range>
VertexSet from_range(const Range& vertices) {
  VertexSet s = 0;
  for (auto v : vertices) s |= single(static_cast<Vertex>(v));
  return s;
}

inline VertexSet from_list(std::initializer_list<Vertex> vertices) { return from_range(vertices); }

// Lexicographic order on the sorted member lists: {0,2} < {0,2,3} < {0,3} < {1}.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  VertexSet diff = a ^ b;
  if (!diff) return false;
  Vertex x = lowest(diff);
  VertexSet above = ~first_n(x + 1);
  return contains(a, x) ? (b & above) != 0 : (a & above) == 0;
}

// Calls f(v) for every member in increasing order.
template <class F>
void for_each(VertexSet s, F&& f) {
  for (; s; s &= s - 1) f(lowest(s));
}

}  // namespace bits

class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n, 0) {
    if (n > kMaxVertices) {
      throw std::invalid_argument("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
  }

  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    adjacency_[u] |= bits::single(v);
    adjacency_[v] |= bits::single(u);
  }

  std::size_t n() const noexcept { return adjacency_.size(); }
  VertexSet all() const noexcept { return bits::first_n(n()); }

  bool adjacent(Vertex u, Vertex v) const { return bits::contains(adjacency_.at(u), v); }
  VertexSet neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return bits::count(adjacency_.at(v)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto mask : adjacency_) twice += bits::count(mask);
    return twice / 2;
  }

  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n(); ++u) {
      bits::for_each(adjacency_[u] & ~bits::first_n(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  bool is_independent(VertexSet s) const {
    if (s & ~all()) return false;
    for (VertexSet rest = s; rest; rest &= rest - 1) {
      if (adjacency_[bits::lowest(rest)] & s) return false;
    }
    return true;
  }

  // Subgraph induced by `keep`, relabelled 0..k-1 in increasing label order.
  // labels[i] is the original label of new vertex i.
  struct Induced;
  Induced induced(VertexSet keep) const;

  Graph complement() const {
    Graph c(n());
    for (Vertex v = 0; v < n(); ++v) c.adjacency_[v] = all() & ~adjacency_[v] & ~bits::single(v);
    return c;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= n()) throw VertexNotFound("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n()));
  }

  std::vector<VertexSet> adjacency_;
};

struct Graph::Induced {
  Graph graph;
  std::vector<Vertex> labels;

  // Maps a vertex set of the induced graph back to original labels.
  VertexSet lift(VertexSet local) const {
    VertexSet out = 0;
    bits::for_each(local, [&](Vertex i) { out |= bits::single(labels[i]); });
    return out;
  }
};

inline Graph::Induced Graph::induced(VertexSet keep) const {
  keep &= all();
  Induced result{Graph(bits::count(keep)), bits::to_vector(keep)};
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < result.labels.size(); ++j) {
      if (adjacent(result.labels[i], result.labels[j])) result.graph.add_edge(i, j);
    }
  }
  return result;
}

// A vertex subset intended to have no internal edges; the owning graph checks
// that via Graph::is_independent. Orders lexicographically by sorted members.
struct IndependentSet {
  VertexSet members = 0;

  static IndependentSet of(std::initializer_list<Vertex> vertices) { return {bits::from_list(vertices)}; }

  std::size_t size() const noexcept { return bits::count(members); }
  bool contains(Vertex v) const noexcept { return bits::contains(members, v); }
  std::vector<Vertex> vertices() const { return bits::to_vector(members); }

  // Characteristic vector in R^n.
  std::vector<double> indicator(std::size_t n) const {
    std::vector<double> x(n, 0.0);
    bits::for_each(members, [&](Vertex v) { x[v] = 1.0; });
    return x;
  }

  template <class W>
  W weight(std::span<const W> w) const {
    W total{0};
    bits::for_each(members, [&](Vertex v) { total += w[v]; });
    return total;
  }

  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
  friend bool operator<(const IndependentSet& a, const IndependentSet& b) { return bits::lex_less(a.members, b.members); }
};

inline std::string to_string(const IndependentSet& s) {
  std::string out = "{";
  bool first = true;
  bits::for_each(s.members, [&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

namespace detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline void check_sum(const std::vector<Rational>& w) {
  Rational total = 0;
  for (const auto& x : w) total += x;
  if (total != 1) throw InvalidDistribution("weights sum to " + to_string(total) + ", expected exactly 1");
}

inline void check_sum(const std::vector<double>& w) {
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw InvalidDistribution("weights sum to " + std::to_string(total) + ", expected 1 within 1e-12");
  }
}

}  // namespace detail

// Probability weights on 0..n-1. Rational weights must sum to exactly 1,
// floating-point weights to within 1e-12.
template <class Weight>
class BasicDistribution {
 public:
  using weight_type = Weight;

  BasicDistribution() = default;

  explicit BasicDistribution(std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (weights_.size() > kMaxVertices) throw InvalidDistribution("too many vertices");
    for (std::size_t v = 0; v < weights_.size(); ++v) {
      if (weights_[v] < 0) throw InvalidDistribution("negative weight on vertex " + std::to_string(v));
      if (!detail::is_zero(weights_[v])) support_ |= bits::single(v);
    }
    detail::check_sum(weights_);
  }

  static BasicDistribution uniform(std::size_t n) {
    if (n == 0) throw InvalidDistribution("uniform distribution on zero vertices");
    return BasicDistribution(std::vector<Weight>(n, Weight(1) / Weight(static_cast<long>(n))));
  }

  static BasicDistribution point_mass(std::size_t n, Vertex v) {
    std::vector<Weight> w(n, Weight(0));
    w.at(v) = Weight(1);
    return BasicDistribution(std::move(w));
  }

  // Uniform over `support`, zero elsewhere.
  static BasicDistribution uniform_on(std::size_t n, VertexSet support) {
    std::vector<Weight> w(n, Weight(0));
    Weight share = Weight(1) / Weight(static_cast<long>(bits::count(support)));
    bits::for_each(support, [&](Vertex v) { w.at(v) = share; });
    return BasicDistribution(std::move(w));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  const Weight& operator[](Vertex v) const { return weights_[v]; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  VertexSet support() const noexcept { return support_; }

  std::vector<double> as_doubles() const {
    std::vector<double> out;
    out.reserve(weights_.size());
    for (const auto& w : weights_) out.push_back(to_double(w));
    return out;
  }

  friend bool operator==(const BasicDistribution&, const BasicDistribution&) = default;

 private:
  std::vector<Weight> weights_;
  VertexSet support_ = 0;
};

using Distribution = BasicDistribution<Rational>;
using NumericDistribution = BasicDistribution<double>;

}  // namespace gelab
