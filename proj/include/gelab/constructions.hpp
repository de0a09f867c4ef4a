#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/graph.hpp"
#include "gelab/rational.hpp"

namespace gelab {

inline constexpr Vertex kRemoved = std::numeric_limits<Vertex>::max();

// E(F u G) = E(F) u E(G) on a shared vertex set.
inline Graph graph_union(const Graph& f, const Graph& g) {
  if (f.n() != g.n()) {
    throw VertexSetMismatch("union of graphs on " + std::to_string(f.n()) + " and " + std::to_string(g.n()) +
                            " vertices");
  }
  Graph u = f;
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  return u;
}

struct Substitution {
  Graph graph;
  std::vector<Vertex> g_labels;  // old label in G -> new label, kRemoved for the substituted vertex
  std::vector<Vertex> f_labels;  // old label in F -> new label
};

namespace detail {

inline std::pair<std::vector<Vertex>, std::vector<Vertex>> substitution_labels(std::size_t ng, Vertex v,
                                                                               std::size_t nf) {
  std::vector<Vertex> gl(ng), fl(nf);
  for (Vertex x = 0; x < ng; ++x) gl[x] = x < v ? x : (x == v ? kRemoved : x - 1);
  for (Vertex y = 0; y < nf; ++y) fl[y] = ng - 1 + y;
  return {gl, fl};
}

}  // namespace detail

// G_{v<-F}: delete v, add a disjoint copy of F, join every vertex of the copy
// to every former neighbour of v. G keeps its labels in order with v removed;
// F's vertices follow.
inline Substitution substitute(const Graph& g, Vertex v, const Graph& f) {
  if (v >= g.n()) throw VertexNotFound("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.n()));
  auto [gl, fl] = detail::substitution_labels(g.n(), v, f.n());
  Substitution out{Graph(g.n() - 1 + f.n()), gl, fl};
  for (auto [a, b] : g.edges()) {
    if (a != v && b != v) out.graph.add_edge(gl[a], gl[b]);
  }
  for (auto [a, b] : f.edges()) out.graph.add_edge(fl[a], fl[b]);
  bits::for_each(g.neighbors(v), [&](Vertex u) {
    for (Vertex y = 0; y < f.n(); ++y) out.graph.add_edge(gl[u], fl[y]);
  });
  return out;
}

// P_{v<-Q}: P off v, P(v) Q(x) on the substituted vertices, in the labels of
// substitute(g, v, f).
template <class W>
BasicDistribution<W> substitute_distribution(const BasicDistribution<W>& p, Vertex v, const BasicDistribution<W>& q) {
  if (v >= p.size()) throw VertexNotFound("vertex " + std::to_string(v) + " not in distribution support range");
  auto [gl, fl] = detail::substitution_labels(p.size(), v, q.size());
  std::vector<W> w(p.size() - 1 + q.size(), W(0));
  for (Vertex x = 0; x < p.size(); ++x) {
    if (x != v) w[gl[x]] = p[x];
  }
  for (Vertex y = 0; y < q.size(); ++y) w[fl[y]] = p[v] * q[y];
  return BasicDistribution<W>(std::move(w));
}

struct BlowupSpec {
  std::vector<std::size_t> counts;  // n_v, with p_v = n_v / m
  std::size_t m = 0;
  std::vector<Vertex> origin;       // new vertex -> the vertex of G it copies
};

struct Blowup {
  Graph graph;
  BlowupSpec spec;
};

// Replaces each v by an independent set of n_v copies, where p_v = n_v / m
// and m is the common denominator; copies of u and v are adjacent iff u ~ v.
// The uniform distribution 1/m on the result corresponds to P.
inline Blowup blow_up(const Graph& g, const Distribution& p) {
  if (p.size() != g.n()) throw std::invalid_argument("distribution length differs from vertex count");
  std::vector<Rational> ws(p.weights().begin(), p.weights().end());
  BigInt m = lcm_of_denominators(ws);
  Blowup out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (p[v] == 0) throw ZeroWeightVertex("vertex " + std::to_string(v) + " has zero weight; restrict to the support first");
    BigInt copies = boost::multiprecision::numerator(Rational(p[v] * Rational(m)));
    if (copies > BigInt(static_cast<long>(kMaxVertices))) throw std::invalid_argument("blow-up exceeds the vertex limit");
    out.spec.counts.push_back(copies.convert_to<std::size_t>());
  }
  if (m > BigInt(static_cast<long>(kMaxVertices))) throw std::invalid_argument("blow-up exceeds the vertex limit");
  out.spec.m = m.convert_to<std::size_t>();

  std::vector<std::vector<Vertex>> copies_of(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (std::size_t c = 0; c < out.spec.counts[v]; ++c) {
      copies_of[v].push_back(out.spec.origin.size());
      out.spec.origin.push_back(v);
    }
  }
  out.graph = Graph(out.spec.origin.size());
  for (auto [u, v] : g.edges()) {
    for (Vertex a : copies_of[u]) {
      for (Vertex b : copies_of[v]) out.graph.add_edge(a, b);
    }
  }
  return out;
}

// Floating-point weights carry no exact n_v / m decomposition.
inline Blowup blow_up(const Graph&, const NumericDistribution&) {
  throw NotRational("blow-up needs exact rational weights");
}

struct GadgetSpec {
  Graph f;
  std::size_t k = 2;
};

struct Gadget {
  Graph graph;
  std::size_t k = 0;
  std::size_t f_order = 0;

  // Labels: A = 0..k-2, then (v, b) at k-1 + v*(k-1) + b.
  bool in_a(Vertex x) const { return x < k - 1; }
  Vertex label_of_a(std::size_t i) const { return i; }
  Vertex label_of(Vertex v, std::size_t b) const { return (k - 1) + v * (k - 1) + b; }
  std::pair<Vertex, std::size_t> pair_of(Vertex x) const { return {(x - (k - 1)) / (k - 1), (x - (k - 1)) % (k - 1)}; }
};

// V = A u V(F) x B with |A| = |B| = k - 1. Edges: every a ~ every (v,b);
// (v,b) ~ (v',b') when v != v' and b != b'; (v,b) ~ (v',b) when vv' in E(F).
// F has an independent set of size k iff the result is not symmetric.
inline Gadget hardness_gadget(const GadgetSpec& spec) {
  if (spec.k < 2) throw InvalidK("gadget needs k >= 2, got " + std::to_string(spec.k));
  if (spec.f.n() == 0) throw std::invalid_argument("gadget needs a nonempty F");
  const std::size_t side = spec.k - 1;
  const std::size_t total = side + spec.f.n() * side;
  if (total > kMaxVertices) throw std::invalid_argument("gadget exceeds the vertex limit");

  Gadget gd{Graph(total), spec.k, spec.f.n()};
  for (std::size_t a = 0; a < side; ++a) {
    for (Vertex v = 0; v < spec.f.n(); ++v) {
      for (std::size_t b = 0; b < side; ++b) gd.graph.add_edge(gd.label_of_a(a), gd.label_of(v, b));
    }
  }
  for (Vertex v = 0; v < spec.f.n(); ++v) {
    for (Vertex w = v + 1; w < spec.f.n(); ++w) {
      for (std::size_t b = 0; b < side; ++b) {
        for (std::size_t c = 0; c < side; ++c) {
          if (b != c || spec.f.adjacent(v, w)) gd.graph.add_edge(gd.label_of(v, b), gd.label_of(w, c));
        }
      }
    }
  }
  return gd;
}

}  // namespace gelab
