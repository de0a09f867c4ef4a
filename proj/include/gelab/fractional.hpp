#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/graph.hpp"
#include "gelab/independent_sets.hpp"
#include "gelab/rational.hpp"
#include "gelab/simplex.hpp"

namespace gelab {

// Nonnegative rational weights on independent sets.
struct FractionalColoring {
  std::vector<std::pair<IndependentSet, Rational>> weights;  // positive entries, lexicographic by set
  Rational total = 0;

  Rational coverage(Vertex v) const {
    Rational c = 0;
    for (const auto& [set, w] : weights) {
      if (set.contains(v)) c += w;
    }
    return c;
  }

  VertexSet covered() const {
    VertexSet s = 0;
    for (const auto& [set, w] : weights) s |= set.members;
    return s;
  }
};

// A multiset of independent sets covering every vertex of `covered` exactly
// `fold` times.
struct CoverMultiset {
  std::vector<std::pair<IndependentSet, BigInt>> multiplicities;  // lexicographic by set
  BigInt fold = 0;
  VertexSet covered = 0;

  BigInt size() const {
    BigInt total = 0;
    for (const auto& [set, m] : multiplicities) total += m;
    return total;
  }

  BigInt count(Vertex v) const {
    BigInt c = 0;
    for (const auto& [set, m] : multiplicities) {
      if (set.contains(v)) c += m;
    }
    return c;
  }
};

struct ChromaticResult {
  Rational value = 0;
  FractionalColoring coloring;            // optimal, supported on maximal independent sets
  std::vector<Rational> fractional_clique;  // optimal packing-LP solution, one entry per vertex
};

namespace detail {

inline FractionalColoring make_coloring(std::span<const IndependentSet> family, std::span<const Rational> y) {
  FractionalColoring fc;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (y[i] > 0) {
      fc.weights.emplace_back(family[i], y[i]);
      fc.total += y[i];
    }
  }
  std::sort(fc.weights.begin(), fc.weights.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return fc;
}

// min sum w_I  s.t.  sum_{I ni v} w_I >= 1, w >= 0, written with surplus
// variables. Its dual is the fractional clique LP.
inline lp::LinearProgram covering_lp(std::size_t n, std::span<const IndependentSet> family) {
  lp::LinearProgram prog;
  const std::size_t k = family.size();
  prog.a.assign(n, std::vector<Rational>(k + n));
  prog.b.assign(n, Rational(1));
  prog.c.assign(k + n, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    prog.c[i] = 1;
    bits::for_each(family[i].members, [&](Vertex v) { prog.a[v][i] = 1; });
  }
  for (std::size_t v = 0; v < n; ++v) prog.a[v][k + v] = -1;
  return prog;
}

// max sum x_v  s.t.  sum_{v in I} x_v <= 1 for every I in family, x >= 0;
// posed as a minimisation of -sum x with slack variables.
inline lp::LinearProgram packing_lp(std::size_t n, std::span<const IndependentSet> family) {
  lp::LinearProgram prog;
  const std::size_t k = family.size();
  prog.a.assign(k, std::vector<Rational>(n + k));
  prog.b.assign(k, Rational(1));
  prog.c.assign(n + k, Rational(0));
  for (std::size_t v = 0; v < n; ++v) prog.c[v] = -1;
  for (std::size_t i = 0; i < k; ++i) {
    bits::for_each(family[i].members, [&](Vertex v) { prog.a[i][v] = 1; });
    prog.a[i][n + i] = 1;
  }
  return prog;
}

}  // namespace detail

// Exact chi_f(G) from the covering LP over maximal independent sets only;
// enlarging a set never reduces coverage, so nothing is lost. The packing
// (fractional clique) LP is solved separately and the two optima must agree.
inline ChromaticResult fractional_chromatic_number(const Graph& g, EnumerationOptions opts = {}) {
  ChromaticResult out;
  if (g.n() == 0) return out;
  auto family = enumerate_maximal_independent_sets(g, opts);

  auto primal = lp::solve(detail::covering_lp(g.n(), family));
  auto dual = lp::solve(detail::packing_lp(g.n(), family));
  if (primal.status != lp::LpStatus::optimal || dual.status != lp::LpStatus::optimal) {
    throw std::logic_error("fractional colouring LP did not reach an optimum");
  }
  if (primal.objective != -dual.objective) {
    throw std::logic_error("covering and packing optima differ: " + to_string(primal.objective) + " vs " +
                           to_string(Rational(-dual.objective)));
  }

  out.value = primal.objective;
  out.coloring = detail::make_coloring(family, std::span<const Rational>(primal.x).first(family.size()));
  out.fractional_clique.assign(dual.x.begin(), dual.x.begin() + static_cast<std::ptrdiff_t>(g.n()));

  for (Vertex v = 0; v < g.n(); ++v) {
    if (out.coloring.coverage(v) < 1) throw std::logic_error("optimal colouring leaves a vertex under-covered");
  }
  if (out.coloring.total != out.value) throw std::logic_error("colouring weights do not sum to the optimum");
  return out;
}

// Rational y >= 0 over `family` with sum_{I ni v} y_I = 1 for every v in
// target, or nothing if no such exactly-uniform fractional cover exists.
inline std::optional<FractionalColoring> uniform_cover_feasible(const Graph& g, std::span<const IndependentSet> family,
                                                                VertexSet target) {
  if (family.empty()) throw std::invalid_argument("uniform_cover_feasible needs a nonempty family");
  if (target & ~g.all()) throw VertexNotFound("target contains vertices outside the graph");
  auto rows = bits::to_vector(target);
  lp::LinearProgram prog;
  prog.a.assign(rows.size(), std::vector<Rational>(family.size()));
  prog.b.assign(rows.size(), Rational(1));
  prog.c.assign(family.size(), Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].contains(rows[r])) prog.a[r][i] = 1;
    }
  }
  auto y = lp::find_feasible(prog);
  if (!y) return std::nullopt;
  return detail::make_coloring(family, *y);
}

// Scales a rational cover by r = lcm of the weight denominators. Every vertex
// of `covered` must then lie in the same number of sets.
inline CoverMultiset integralize_cover(const FractionalColoring& fc, VertexSet covered) {
  std::vector<Rational> ws;
  for (const auto& [set, w] : fc.weights) ws.push_back(w);
  BigInt r = lcm_of_denominators(ws);

  CoverMultiset cm;
  cm.covered = covered;
  for (const auto& [set, w] : fc.weights) {
    Rational scaled = w * Rational(r);
    if (boost::multiprecision::denominator(scaled) != 1) throw std::logic_error("lcm scaling left a fraction");
    BigInt m = boost::multiprecision::numerator(scaled);
    if (m > 0) cm.multiplicities.emplace_back(set, m);
  }
  bool first = true;
  bits::for_each(covered, [&](Vertex v) {
    BigInt c = cm.count(v);
    if (first) {
      cm.fold = c;
      first = false;
    } else if (c != cm.fold) {
      throw NotUniform("vertex " + std::to_string(v) + " is covered " + c.str() + " times, expected " + cm.fold.str());
    }
  });
  if (!first && cm.fold == 0) throw NotUniform("cover does not reach the covered vertices");
  return cm;
}

// Covered set defaults to the union of the weighted sets.
inline CoverMultiset integralize_cover(const FractionalColoring& fc) { return integralize_cover(fc, fc.covered()); }

// A b-fold colouring attaining chi_f = |S| / b. The optimal colouring may
// cover a vertex more than once; weight is shifted from I to I \ {v} (lowest
// labels first, sets in lexicographic order) until every vertex is covered
// exactly once, which leaves the total unchanged.
inline CoverMultiset b_fold_realization(const Graph& g, EnumerationOptions opts = {}) {
  if (g.n() == 0) return {};
  auto chi = fractional_chromatic_number(g, opts);

  std::map<IndependentSet, Rational> weights;
  for (const auto& [set, w] : chi.coloring.weights) weights[set] += w;

  for (Vertex v = 0; v < g.n(); ++v) {
    Rational excess = -1;
    for (const auto& [set, w] : weights) {
      if (set.contains(v)) excess += w;
    }
    while (excess > 0) {
      auto it = std::find_if(weights.begin(), weights.end(), [&](const auto& e) { return e.first.contains(v); });
      Rational moved = std::min(excess, it->second);
      IndependentSet shrunk{it->first.members & ~bits::single(v)};
      it->second -= moved;
      if (it->second == 0) weights.erase(it);
      if (shrunk.members) weights[shrunk] += moved;
      excess -= moved;
    }
  }

  FractionalColoring exact;
  for (const auto& [set, w] : weights) {
    exact.weights.emplace_back(set, w);
    exact.total += w;
  }
  if (exact.total != chi.value) throw std::logic_error("tightening changed the colouring total");
  return integralize_cover(exact, g.all());
}

}  // namespace gelab
