// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gelab/gelab.hpp"
#include "gelab/oracle.hpp"
#include "support/corpus.hpp"

using namespace gelab;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

std::string describe_graph(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " E={";
  for (auto [u, v] : g.edges()) out << u << '-' << v << ' ';
  out << '}';
  return out.str();
}

std::string describe_distribution(const Distribution& p) {
  std::ostringstream out;
  out << "P=(";
  for (std::size_t v = 0; v < p.size(); ++v) out << (v ? "," : "") << to_string(p[v]);
  out << ')';
  return out.str();
}

double lg_chi_f_support(const Graph& g, VertexSet support) {
  return std::log2(to_double(fractional_chromatic_number(g.induced(support).graph).value));
}

const std::vector<Graph>& corpus_up_to_8() {
  static const std::vector<Graph> corpus = testing::connected_graphs_up_to(8);
  return corpus;
}

Distribution normalised_fractional_clique(const Graph& g) {
  auto chi = fractional_chromatic_number(g);
  std::vector<Rational> w;
  for (const auto& x : chi.fractional_clique) w.push_back(x / chi.value);
  return Distribution(w);
}

// Criterion 1.
Outcome characterization_equivalence() {
  Outcome out;
  auto agree = [&](const Graph& g, const Distribution& p) {
    auto verdict = is_entropy_maximizer(g, p);
    double h = entropy(g, p, 1e-9).value;
    double target = lg_chi_f_support(g, p.support());
    bool numeric = std::abs(h - target) <= 1e-6;
    out.check(verdict.is_maximizer == numeric, [&] {
      std::ostringstream s;
      s << describe_graph(g) << ' ' << describe_distribution(p) << " verdict=" << verdict.is_maximizer << " H=" << h
        << " lg chi_f=" << target;
      return s.str();
    });
  };
  for (const auto& g : corpus_up_to_8()) agree(g, Distribution::uniform(g.n()));

  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    auto g = testing::random_graph(rng, 2 + rng() % 9, 0.25 + 0.5 * (rng() % 100) / 100.0);
    agree(g, normalised_fractional_clique(g));
    for (int i = 0; i < 200; ++i) agree(g, testing::random_rational_distribution(rng, g.n(), 0, 4));
  }
  return out;
}

// Criterion 2.
Outcome symmetry_iff() {
  Outcome out;
  for (const auto& g : corpus_up_to_8()) {
    auto verdict = is_symmetric(g);
    Rational n_over_alpha(static_cast<long>(g.n()), static_cast<long>(oracle::brute_alpha(g)));
    auto chi = fractional_chromatic_number(g);
    bool expected = chi.value == n_over_alpha;
    bool ok = verdict.is_symmetric == expected && verdict.n_over_alpha == n_over_alpha;
    std::string why;
    if (ok && verdict.is_symmetric) {
      if (!verdict.certificate) {
        ok = false;
        why = "missing certificate";
      } else {
        auto check = oracle::verify_certificate(g, Distribution::uniform(g.n()), *verdict.certificate);
        ok = check.ok;
        if (!ok) why = check.reasons.front();
      }
    }
    if (ok && !verdict.is_symmetric && verdict.certificate) {
      ok = false;
      why = "certificate on a negative verdict";
    }
    out.check(ok, [&] { return describe_graph(g) + " symmetric=" + std::to_string(verdict.is_symmetric) + " " + why; });
  }
  return out;
}

// Criterion 3.
Outcome upper_bound() {
  Outcome out;
  std::mt19937_64 rng(103);
  for (int t = 0; t < 1000; ++t) {
    auto g = testing::random_graph(rng, 1 + rng() % 12, 0.2 + 0.6 * (rng() % 100) / 100.0);
    auto p = testing::random_rational_distribution(rng, g.n(), 0, 6);
    auto r = entropy(g, p, 1e-9);
    double bound = lg_chi_f_support(g, p.support());
    out.check(r.value <= bound + 1e-9 + r.gap, [&] {
      return describe_graph(g) + " " + describe_distribution(p) + " H=" + std::to_string(r.value) +
             " bound=" + std::to_string(bound);
    });
  }
  return out;
}

// Criterion 4.
Outcome solver_accuracy() {
  Outcome out;
  auto bracket = [&](const Graph& g, const Distribution& p) {
    auto r = entropy(g, p, 1e-9);
    double brute = oracle::brute_entropy(g, p);
    bool ok = r.value - r.gap <= brute + 1e-8 && brute - 1e-8 <= r.value;
    out.check(ok, [&] {
      std::ostringstream s;
      s.precision(15);
      s << describe_graph(g) << ' ' << describe_distribution(p) << " fw=[" << r.value - r.gap << ", " << r.value
        << "] brute=" << brute;
      return s.str();
    });
  };
  for (const auto& g : corpus_up_to_8()) bracket(g, Distribution::uniform(g.n()));
  std::mt19937_64 rng(107);
  for (int t = 0; t < 300; ++t) {
    auto g = testing::random_graph(rng, 9 + rng() % 2, 0.2 + 0.6 * (rng() % 100) / 100.0);
    bracket(g, t % 2 ? Distribution::uniform(g.n()) : testing::random_rational_distribution(rng, g.n(), 0, 6));
  }

  double c5 = entropy(testing::cycle(5), Distribution::uniform(5), 1e-9).value;
  out.check(std::abs(c5 - std::log2(2.5)) <= 1e-8, [&] { return "H(C5) = " + std::to_string(c5); });
  for (std::size_t n = 1; n <= 8; ++n) {
    double kn = entropy(testing::complete(n), Distribution::uniform(n), 1e-9).value;
    out.check(std::abs(kn - std::log2(static_cast<double>(n))) <= 1e-8,
              [&] { return "H(K" + std::to_string(n) + ") = " + std::to_string(kn); });
  }
  return out;
}

// Criterion 5.
Outcome substitution_additivity() {
  Outcome out;
  std::mt19937_64 rng(109);
  for (int t = 0; t < 200; ++t) {
    auto g = testing::random_graph(rng, 1 + rng() % 6, 0.2 + 0.6 * (rng() % 100) / 100.0);
    auto f = testing::random_graph(rng, 1 + rng() % 6, 0.2 + 0.6 * (rng() % 100) / 100.0);
    auto p = testing::random_rational_distribution(rng, g.n(), 0, 6);
    auto q = testing::random_rational_distribution(rng, f.n(), 0, 6);
    Vertex v = rng() % g.n();
    auto s = substitute(g, v, f);
    auto pq = substitute_distribution(p, v, q);
    double lhs = entropy(s.graph, pq, 1e-9).value;
    double rhs = entropy(g, p, 1e-9).value + to_double(p[v]) * entropy(f, q, 1e-9).value;
    out.check(std::abs(lhs - rhs) <= 3e-9, [&] {
      return describe_graph(g) + " v=" + std::to_string(v) + " F " + describe_graph(f) + " diff=" +
             std::to_string(lhs - rhs);
    });
  }
  return out;
}

// Criterion 6.
Outcome monotonicity_and_subadditivity() {
  Outcome out;
  std::mt19937_64 rng(113);
  for (int t = 0; t < 500; ++t) {
    auto g = testing::random_graph(rng, 1 + rng() % 10, 0.2 + 0.6 * (rng() % 100) / 100.0);
    auto f = testing::random_spanning_subgraph(rng, g, 0.6);
    auto p = testing::random_rational_distribution(rng, g.n(), 0, 6);
    double hf = entropy(f, p, 1e-9).value, hg = entropy(g, p, 1e-9).value;
    out.check(hf <= hg + 3e-9, [&] { return "monotonicity " + describe_graph(g) + " excess=" + std::to_string(hf - hg); });
  }
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + rng() % 10;
    auto f = testing::random_graph(rng, n, 0.1 + 0.4 * (rng() % 100) / 100.0);
    auto g = testing::random_graph(rng, n, 0.1 + 0.4 * (rng() % 100) / 100.0);
    auto p = testing::random_rational_distribution(rng, n, 0, 6);
    double hu = entropy(graph_union(f, g), p, 1e-9).value;
    double hf = entropy(f, p, 1e-9).value, hg = entropy(g, p, 1e-9).value;
    out.check(hu <= hf + hg + 3e-9,
              [&] { return "sub-additivity " + describe_graph(f) + " " + describe_graph(g) + " excess=" + std::to_string(hu - hf - hg); });
  }
  return out;
}

// Criterion 7.
Outcome gadget_iff() {
  Outcome out;
  EnumerationOptions wide;
  wide.vertex_cap = kMaxVertices;
  for (const auto& f : corpus_up_to_8()) {
    if (f.n() > 7) continue;
    std::size_t alpha_f = oracle::brute_alpha(f);
    for (std::size_t k = 2; k <= f.n() + 1; ++k) {
      auto gd = hardness_gadget({f, k});
      auto sym = is_symmetric(gd.graph, wide);
      std::size_t alpha_g = alpha(gd.graph, wide).value;
      bool ok = sym.is_symmetric == (alpha_f <= k - 1) && alpha_g == std::max(alpha_f, k - 1);
      out.check(ok, [&] {
        return "F " + describe_graph(f) + " k=" + std::to_string(k) + " symmetric=" + std::to_string(sym.is_symmetric) +
               " alpha(gadget)=" + std::to_string(alpha_g);
      });
    }
  }
  return out;
}

// Criterion 8.
Outcome blowup_identity() {
  Outcome out;
  std::mt19937_64 rng(127);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 6;
    auto g = testing::random_graph(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0);
    // Random composition of m into n positive parts, so p_v = n_v / m.
    std::size_t m = n + rng() % (12 - n + 1);
    std::vector<long> parts(n, 1);
    for (std::size_t extra = m - n; extra > 0; --extra) ++parts[rng() % n];
    std::vector<Rational> w;
    for (long c : parts) w.emplace_back(c, static_cast<long>(m));
    Distribution p(w);
    auto b = blow_up(g, p);
    double hb = entropy(b.graph, Distribution::uniform(b.graph.n()), 1e-9).value;
    double hg = entropy(g, p, 1e-9).value;
    Rational chi_g = fractional_chromatic_number(g).value;
    Rational chi_b = fractional_chromatic_number(b.graph).value;
    out.check(b.spec.m <= 12 && std::abs(hb - hg) <= 2e-9 && chi_g <= chi_b, [&] {
      return describe_graph(g) + " " + describe_distribution(p) + " dH=" + std::to_string(hb - hg) + " chi_f " +
             to_string(chi_g) + " vs " + to_string(chi_b);
    });
  }
  return out;
}

// Criterion 9.
Outcome continuity() {
  Outcome out;
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> unit(-1.0, 1.0), scale(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 10;
    auto g = testing::random_graph(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0);
    auto p = testing::random_rational_distribution(rng, n, 1, 9);
    double h = entropy(g, p, 1e-9).value;
    auto base = p.as_doubles();
    double pmin = *std::min_element(base.begin(), base.end());
    for (double eps : {0.1, 0.01}) {
      double delta = 0.5 * pmin * (h > 0.0 ? std::min(1.0, eps / (static_cast<double>(n) * h)) : 1.0);
      for (int i = 0; i < 20; ++i) {
        std::vector<double> u(n);
        for (auto& x : u) x = unit(rng);
        double mean = 0.0;
        for (double x : u) mean += x / static_cast<double>(n);
        double sup = 0.0;
        for (auto& x : u) sup = std::max(sup, std::abs(x -= mean));
        std::vector<double> w = base;
        if (sup > 0.0) {
          double s = 0.999 * delta * scale(rng) / sup;
          for (std::size_t v = 0; v < n; ++v) w[v] += s * u[v];
        }
        double total = 0.0;
        for (double x : w) total += x;
        for (auto& x : w) x /= total;
        double hp = entropy(g, NumericDistribution(w), 1e-9).value;
        out.check(std::abs(hp - h) < eps + 2e-9, [&] {
          return describe_graph(g) + " eps=" + std::to_string(eps) + " dH=" + std::to_string(hp - h);
        });
      }
    }
  }
  return out;
}

// Criterion 10.
Outcome b_fold() {
  Outcome out;
  for (const auto& g : corpus_up_to_8()) {
    auto cm = b_fold_realization(g);
    Rational chi = fractional_chromatic_number(g).value;
    bool ok = cm.fold > 0 && Rational(cm.size(), cm.fold) == chi;
    // Expand the multiset into colours; each vertex gets exactly `fold`
    // colours and adjacent vertices share none.
    std::vector<std::set<std::size_t>> colours(g.n());
    std::size_t colour = 0;
    for (const auto& [set, m] : cm.multiplicities) {
      for (BigInt c = 0; c < m; ++c, ++colour) bits::for_each(set.members, [&](Vertex v) { colours[v].insert(colour); });
    }
    for (Vertex v = 0; v < g.n() && ok; ++v) ok = BigInt(static_cast<long>(colours[v].size())) == cm.fold;
    for (auto [u, v] : g.edges()) {
      for (std::size_t c : colours[u]) ok = ok && !colours[v].count(c);
    }
    out.check(ok, [&] { return describe_graph(g) + " fold=" + cm.fold.str() + " |S|=" + cm.size().str(); });
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "maximizer verdict matches |H - lg chi_f(G[supp])| <= 1e-6", characterization_equivalence},
      {2, "symmetric iff chi_f = n/alpha, certificates verified", symmetry_iff},
      {3, "H <= lg chi_f(G[supp]) + 1e-9 + gap", upper_bound},
      {4, "Frank-Wolfe bracket meets brute force +-1e-8; C5 and K_n closed forms", solver_accuracy},
      {5, "substitution additivity within 3e-9", substitution_additivity},
      {6, "monotonicity and sub-additivity within 3e-9", monotonicity_and_subadditivity},
      {7, "gadget symmetric iff alpha(F) <= k-1; alpha(gadget) = max(alpha(F), k-1)", gadget_iff},
      {8, "blow-up entropy within 2e-9 and chi_f(G) <= chi_f(G')", blowup_identity},
      {9, "continuity |dH| < eps + 2e-9 inside delta", continuity},
      {10, "b-fold realization |S|/fold = chi_f with disjoint colour sets", b_fold},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && o.failures == 0 && o.cases > 0;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << 'C' << c.id << ' ' << c.name << " (" << o.cases << " cases, "
              << o.failures << " failures, " << std::fixed << std::setprecision(1) << secs << " s)";
    std::cout.unsetf(std::ios::fixed);
    if (!error.empty()) std::cout << " exception: " << error;
    if (o.failures) std::cout << " first: " << o.first_failure;
    std::cout << std::endl;
  }
  return failed;
}
