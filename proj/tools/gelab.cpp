// gelab: graph entropy, fractional chromatic number and the symmetry /
// maximiser characterisations from the command line.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
// error, 3 Frank-Wolfe did not converge, 4 enumeration cap exceeded,
// 5 internal error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gelab/gelab.hpp"
#include "gelab/oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gelab;

enum Exit { kOk = 0, kNo = 1, kInputError = 2, kNonConvergence = 3, kCapExceeded = 4, kInternal = 5 };

struct Globals {
  bool json = false;
  std::string format = "auto";
  std::optional<std::size_t> cap;
  double tol = 1e-9;
  std::size_t max_iterations = 1'000'000;
  unsigned seed = 0;
};

std::size_t resolve_cap(const Globals& g) {
  if (g.cap) return *g.cap;
  if (const char* env = std::getenv("GELAB_CAP")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("GELAB_CAP is not an integer: '") + env + "'");
    }
  }
  return kDefaultEnumerationCap;
}

EnumerationOptions enumeration(const Globals& g) { return {resolve_cap(g)}; }

Graph load_graph(const std::string& path, const Globals& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return io::read_graph(in, io::parse_format(g.format));
}

Distribution load_distribution(const std::optional<std::string>& path, std::size_t n) {
  if (!path) return Distribution::uniform(n);
  std::ifstream in(*path);
  if (!in) throw ParseError("cannot open distribution file '" + *path + "'");
  auto file = io::read_distribution(in, n);
  if (file.renormalized) std::cerr << "warning: decimal probabilities did not sum to 1; renormalised\n";
  return file.distribution;
}

json set_json(const IndependentSet& s) { return json(s.vertices()); }

json cover_json(const CoverMultiset& cm) {
  json sets = json::array();
  for (const auto& [set, m] : cm.multiplicities) sets.push_back({{"set", set_json(set)}, {"multiplicity", m.str()}});
  return {{"fold", cm.fold.str()}, {"covered", bits::to_vector(cm.covered)}, {"sets", sets}};
}

void print_cover(std::ostream& out, const CoverMultiset& cm) {
  out << "certificate: fold " << cm.fold << ", " << cm.size() << " sets\n";
  for (const auto& [set, m] : cm.multiplicities) out << "  " << to_string(set) << " x" << m << '\n';
}

int cmd_entropy(const Globals& g, const std::string& graph_path, const std::optional<std::string>& dist_path,
                bool check) {
  auto graph = load_graph(graph_path, g);
  auto p = load_distribution(dist_path, graph.n());
  EntropyOptions opts;
  opts.tol = g.tol;
  opts.max_iterations = g.max_iterations;
  opts.enumeration = enumeration(g);
  EntropyResult r;
  int code = kOk;
  try {
    r = entropy(graph, p, opts);
  } catch (const NonConvergence& e) {
    r = e.best_so_far();
    code = kNonConvergence;
  }
  std::optional<double> brute;
  if (check) brute = oracle::brute_entropy(graph, p, 1e-10, g.seed);

  if (g.json) {
    json minimizer = json::object();
    for (Vertex v = 0; v < graph.n(); ++v) minimizer[std::to_string(v)] = r.minimizer.coords[v];
    json decomposition = json::array();
    for (const auto& [set, w] : r.minimizer.decomposition) decomposition.push_back({{"set", set_json(set)}, {"weight", w}});
    json out = {{"value", r.value},  {"gap", r.gap},          {"iterations", r.iterations},
                {"converged", r.converged}, {"minimizer", minimizer}, {"decomposition", decomposition}};
    if (brute) out["oracle_value"] = *brute;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << std::setprecision(12) << "value " << r.value << " bits\n"
              << "gap " << r.gap << '\n'
              << "iterations " << r.iterations << '\n';
    if (!r.converged) std::cout << "not converged\n";
    if (brute) std::cout << "oracle " << *brute << '\n';
  }
  return code;
}

int cmd_chif(const Globals& g, const std::string& graph_path) {
  auto graph = load_graph(graph_path, g);
  auto chi = fractional_chromatic_number(graph, enumeration(g));
  if (g.json) {
    json coloring = json::array();
    for (const auto& [set, w] : chi.coloring.weights) coloring.push_back({{"set", set_json(set)}, {"weight", to_string(w)}});
    json clique = json::object();
    for (Vertex v = 0; v < chi.fractional_clique.size(); ++v) clique[std::to_string(v)] = to_string(chi.fractional_clique[v]);
    std::cout << json{{"chi_f", to_string(chi.value)},
                      {"decimal", to_double(chi.value)},
                      {"coloring", coloring},
                      {"fractional_clique", clique}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << to_string(chi.value) << " (" << std::setprecision(12) << to_double(chi.value) << ")\n";
  }
  return kOk;
}

int cmd_symmetric(const Globals& g, const std::string& graph_path) {
  auto graph = load_graph(graph_path, g);
  auto verdict = is_symmetric(graph, enumeration(g));
  if (g.json) {
    json out = {{"symmetric", verdict.is_symmetric},
                {"chi_f", to_string(verdict.chi_f)},
                {"n_over_alpha", to_string(verdict.n_over_alpha)},
                {"certificate", verdict.certificate ? cover_json(*verdict.certificate) : json(nullptr)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (verdict.is_symmetric ? "symmetric" : "not symmetric") << '\n'
              << "chi_f " << to_string(verdict.chi_f) << '\n'
              << "n/alpha " << to_string(verdict.n_over_alpha) << '\n';
    if (verdict.certificate) print_cover(std::cout, *verdict.certificate);
  }
  return verdict.is_symmetric ? kOk : kNo;
}

int cmd_maximizer(const Globals& g, const std::string& graph_path, const std::string& dist_path) {
  auto graph = load_graph(graph_path, g);
  auto p = load_distribution(dist_path, graph.n());
  auto verdict = is_entropy_maximizer(graph, p, enumeration(g));
  if (g.json) {
    json out = {{"maximizer", verdict.is_maximizer},
                {"chi_f_support", to_string(verdict.chi_f_support)},
                {"alpha_p", to_string(verdict.alpha_p)},
                {"reason", to_string(verdict.reason)},
                {"certificate", verdict.certificate ? cover_json(*verdict.certificate) : json(nullptr)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (verdict.is_maximizer ? "maximizer" : "not a maximizer") << '\n'
              << "chi_f(G[supp]) " << to_string(verdict.chi_f_support) << '\n'
              << "alpha_P " << to_string(verdict.alpha_p) << '\n';
    if (verdict.certificate) print_cover(std::cout, *verdict.certificate);
    else std::cout << "reason " << to_string(verdict.reason) << '\n';
  }
  return verdict.is_maximizer ? kOk : kNo;
}

int cmd_gadget(const Globals& g, const std::string& graph_path, std::size_t k) {
  auto f = load_graph(graph_path, g);
  auto gd = hardness_gadget({f, k});
  std::vector<std::string> header{"hardness gadget, k = " + std::to_string(k) + ", |V(F)| = " + std::to_string(f.n()),
                                  "labels 0.." + std::to_string(k - 2) + " are A; (v,b) is " + std::to_string(k - 1) +
                                      " + v*" + std::to_string(k - 1) + " + b"};
  for (Vertex x = 0; x < gd.graph.n(); ++x) {
    if (gd.in_a(x)) {
      header.push_back(std::to_string(x) + " = a" + std::to_string(x));
    } else {
      auto [v, b] = gd.pair_of(x);
      header.push_back(std::to_string(x) + " = (" + std::to_string(v) + "," + std::to_string(b) + ")");
    }
  }
  io::write_edge_list(std::cout, gd.graph, header);
  return kOk;
}

int cmd_substitute(const Globals& g, const std::string& graph_path, Vertex v, const std::string& f_path,
                   const std::optional<std::string>& p_path, const std::optional<std::string>& q_path) {
  auto graph = load_graph(graph_path, g);
  auto f = load_graph(f_path, g);
  auto sub = substitute(graph, v, f);
  std::vector<std::string> header{"substitution of F for vertex " + std::to_string(v)};
  for (Vertex x = 0; x < graph.n(); ++x) {
    if (x != v) header.push_back("G " + std::to_string(x) + " -> " + std::to_string(sub.g_labels[x]));
  }
  for (Vertex y = 0; y < f.n(); ++y) header.push_back("F " + std::to_string(y) + " -> " + std::to_string(sub.f_labels[y]));
  if (p_path || q_path) {
    auto p = load_distribution(p_path, graph.n());
    auto q = load_distribution(q_path, f.n());
    auto pq = substitute_distribution(p, v, q);
    for (Vertex x = 0; x < pq.size(); ++x) header.push_back("p " + std::to_string(x) + " " + to_string(pq[x]));
  }
  io::write_edge_list(std::cout, sub.graph, header);
  return kOk;
}

int cmd_blowup(const Globals& g, const std::string& graph_path, const std::string& dist_path) {
  auto graph = load_graph(graph_path, g);
  auto p = load_distribution(dist_path, graph.n());
  auto b = blow_up(graph, p);
  std::vector<std::string> header{"blow-up with m = " + std::to_string(b.spec.m)};
  for (Vertex x = 0; x < b.graph.n(); ++x) header.push_back(std::to_string(x) + " copies " + std::to_string(b.spec.origin[x]));
  io::write_edge_list(std::cout, b.graph, header);
  return kOk;
}

int cmd_union(const Globals& g, const std::string& a_path, const std::string& b_path) {
  auto u = graph_union(load_graph(a_path, g), load_graph(b_path, g));
  io::write_edge_list(std::cout, u, {"union"});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph entropy and fractional chromatic number toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--format", g.format, "Graph format: auto, edge-list or dimacs")->check(CLI::IsMember({"auto", "edge-list", "dimacs"}));
  app.add_option("--cap", g.cap, "Enumeration vertex cap (default 40, or $GELAB_CAP)")->check(CLI::Range(1, 64));
  app.add_option("--tol", g.tol, "Frank-Wolfe duality-gap tolerance in bits")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", g.max_iterations, "Frank-Wolfe iteration limit")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "First multi-start seed for the brute-force oracle");
  app.fallthrough();

  std::string graph_path, second_path, dist_path_value;
  std::optional<std::string> dist_path, p_path, q_path;
  std::size_t k = 2;
  Vertex vertex = 0;
  bool check = false;

  auto* entropy_cmd = app.add_subcommand("entropy", "H(G,P) with a duality-gap certificate");
  entropy_cmd->add_option("graph", graph_path)->required();
  entropy_cmd->add_option("dist", dist_path, "Distribution file (default uniform)");
  entropy_cmd->add_flag("--check", check, "Also run the brute-force oracle (n <= 10)");

  auto* chif_cmd = app.add_subcommand("chif", "Exact fractional chromatic number");
  chif_cmd->add_option("graph", graph_path)->required();

  auto* sym_cmd = app.add_subcommand("symmetric", "Is the uniform distribution an entropy maximiser?");
  sym_cmd->add_option("graph", graph_path)->required();

  auto* max_cmd = app.add_subcommand("maximizer", "Does P maximise H(G, .)?");
  max_cmd->add_option("graph", graph_path)->required();
  max_cmd->add_option("dist", dist_path_value)->required();

  auto* gadget_cmd = app.add_subcommand("gadget", "Hardness gadget for (F, k)");
  gadget_cmd->add_option("graph", graph_path)->required();
  gadget_cmd->add_option("--k", k, "Independent-set size threshold")->required();

  auto* sub_cmd = app.add_subcommand("substitute", "Substitute graph F for a vertex of G");
  sub_cmd->add_option("graph", graph_path)->required();
  sub_cmd->add_option("vertex", vertex)->required();
  sub_cmd->add_option("f", second_path)->required();
  sub_cmd->add_option("--dist", p_path, "Distribution on G");
  sub_cmd->add_option("--fdist", q_path, "Distribution on F");

  auto* blow_cmd = app.add_subcommand("blowup", "Blow up G by a rational distribution");
  blow_cmd->add_option("graph", graph_path)->required();
  blow_cmd->add_option("dist", dist_path_value)->required();

  auto* union_cmd = app.add_subcommand("union", "Edge union of two graphs on the same vertex set");
  union_cmd->add_option("graph", graph_path)->required();
  union_cmd->add_option("other", second_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*entropy_cmd) return cmd_entropy(g, graph_path, dist_path, check);
    if (*chif_cmd) return cmd_chif(g, graph_path);
    if (*sym_cmd) return cmd_symmetric(g, graph_path);
    if (*max_cmd) return cmd_maximizer(g, graph_path, dist_path_value);
    if (*gadget_cmd) return cmd_gadget(g, graph_path, k);
    if (*sub_cmd) return cmd_substitute(g, graph_path, vertex, second_path, p_path, q_path);
    if (*blow_cmd) return cmd_blowup(g, graph_path, dist_path_value);
    if (*union_cmd) return cmd_union(g, graph_path, second_path);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
