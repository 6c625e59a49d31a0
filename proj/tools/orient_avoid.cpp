// orient-avoid: command-line front end for the orient library.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "orient/algebra.hpp"
#include "orient/constructors.hpp"
#include "orient/generators.hpp"
#include "orient/guard.hpp"
#include "orient/io.hpp"
#include "orient/oracle.hpp"

using namespace orient;
using io::Json;

namespace {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitNo = 1;  // UNSAT, invalid certificate, rejected, failed check
constexpr int kExitGuard = 2;
constexpr int kExitInput = 3;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> read_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

// gen ---------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

Graph generate(const GenArgs& a) {
  const auto need = [&](std::size_t k) {
    if (a.params.size() != k)
      throw std::invalid_argument("gen " + a.kind + ": expected " + std::to_string(k) + " parameter(s)");
  };
  std::mt19937_64 rng(a.seed);
  if (a.kind == "complete") {
    need(1);
    return complete_graph(std::stoi(a.params[0]));
  }
  if (a.kind == "complete-minus-matching") {
    need(1);
    return complete_minus_matching(std::stoi(a.params[0]));
  }
  if (a.kind == "cycle") {
    need(1);
    return cycle_graph(std::stoi(a.params[0]));
  }
  if (a.kind == "random-gnp") {
    need(2);
    return random_gnp(std::stoi(a.params[0]), std::stod(a.params[1]), rng);
  }
  if (a.kind == "random-bipartite") {
    need(3);
    return random_bipartite(std::stoi(a.params[0]), std::stoi(a.params[1]), std::stod(a.params[2]), rng);
  }
  throw std::invalid_argument("gen: unknown kind '" + a.kind + "'");
}

int run_gen(const GenArgs& a) {
  const Graph g = generate(a);
  Output out(a.out);
  if (a.format == "json") {
    out.stream() << io::graph_to_json(g).dump() << '\n';
  } else {
    out.stream() << io::write_graph_text(g);
  }
  return kExitOk;
}

// solve -------------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::string forbidden;
  std::string mode;
  std::string format = "dot";
  int max_edges = SearchLimits{}.max_edges;
  std::string out;
};

ForbiddenSets load_forbidden(const std::string& path, const Graph& g, const std::string& mode_override) {
  Json j = io::load_json(path);
  if (!mode_override.empty()) j["mode"] = mode_override;
  if (!j.contains("mode")) j["mode"] = "outdeg";
  return io::forbidden_from_json(j, g);
}

int run_solve(const SolveArgs& a) {
  const Graph g = io::load_graph(a.graph);
  const ForbiddenSets f = load_forbidden(a.forbidden, g, a.mode);
  if (f.dropped() > 0) std::cerr << "note: dropped " << f.dropped() << " unreachable forbidden value(s)\n";
  const auto d = find_orientation(g, f, SearchLimits{a.max_edges});
  Output out(a.out);
  if (!d) {
    out.stream() << "UNSAT\n";
    return kExitNo;
  }
  if (a.format == "json") {
    out.stream() << io::orientation_to_json(*d).dump() << '\n';
  } else {
    out.stream() << io::orientation_to_dot(*d);
  }
  return kExitOk;
}

// certify -----------------------------------------------------------------

struct CertifyArgs {
  std::string graph;
  std::string certificate;
  std::string forbidden;
  std::string out;
};

int run_certify(const CertifyArgs& a) {
  const Graph g = io::load_graph(a.graph);
  const Construction c = io::certificate_from_json(io::load_json(a.certificate), g);
  const ForbiddenSets f = a.forbidden.empty() ? ForbiddenSets::none(g) : load_forbidden(a.forbidden, g, "");
  const auto cert = certify_h_condition(g, c.ordering, c.h, f);
  Output out(a.out);
  out.stream() << io::certificate_to_json(g, cert).dump() << '\n';
  return cert.valid ? kExitOk : kExitNo;
}

// construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string graph;
  std::string bound = "third";
  std::string gamma = "1/10";
  std::uint64_t seed = 0;
  int max_attempts = 200;
  std::string orientation;
  std::string forbidden;
  std::string order;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  const Graph g = io::load_graph(a.graph);
  const ForbiddenSets f = a.forbidden.empty() ? ForbiddenSets::none(g) : load_forbidden(a.forbidden, g, "");
  Output out(a.out);
  Construction c;
  if (a.bound == "third") {
    const VertexOrdering ord =
        a.order.empty() ? VertexOrdering::identity(g.num_vertices()) : VertexOrdering(read_int_list(a.order));
    c = build_h_third(g, ord);
  } else if (a.bound == "two-thirds") {
    const Orientation d =
        a.orientation.empty() ? balanced_orientation(g) : io::orientation_from_json(io::load_json(a.orientation), g);
    c = build_h_two_thirds(g, d);
  } else if (a.bound == "random") {
    RandomOptions opts;
    opts.gamma = parse_rational(a.gamma);
    opts.seed = a.seed;
    opts.max_attempts = a.max_attempts;
    const auto result = build_h_random(g, opts);
    if (const auto* fail = std::get_if<RandomFailure>(&result)) {
      Json report = {{"status", "failure"},
                     {"attempts", fail->attempts},
                     {"worst_attempt", fail->worst_attempt},
                     {"violations", fail->violations},
                     {"weights", fail->weights},
                     {"vertex_ok", fail->vertex_ok}};
      out.stream() << report.dump() << '\n';
      return kExitNo;
    }
    c = std::get<RandomSuccess>(result).construction;
  } else {
    throw std::invalid_argument("construct: --bound must be third, two-thirds or random");
  }
  const auto cert = certify_h_condition(g, c.ordering, c.h, f);
  out.stream() << io::certificate_to_json(g, cert).dump() << '\n';
  return cert.valid ? kExitOk : kExitNo;
}

// duality-check -----------------------------------------------------------

struct DualityArgs {
  int size = 3;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string out;
};

Json matrix_rows(const RationalMatrix& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(format_rational(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int run_duality(const DualityArgs& a) {
  if (a.size < 1) throw std::invalid_argument("duality-check: --size must be positive");
  std::mt19937_64 rng(a.seed);
  const int max_norm = std::min(2 * a.size, 12);
  Json counterexample = nullptr;
  int passed = 0;
  for (int t = 0; t < a.trials; ++t) {
    const int rows = uniform_int(rng, 1, a.size);
    const int cols = uniform_int(rng, 1, a.size);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = uniform_int(rng, -3, 3);
    std::vector<int> alpha(rows, 0);
    std::vector<int> beta(cols, 0);
    const int norm = uniform_int(rng, 0, max_norm);
    for (int k = 0; k < norm; ++k) {
      ++alpha[uniform_int(rng, 0, rows - 1)];
      ++beta[uniform_int(rng, 0, cols - 1)];
    }
    const auto fast = coeff_via_permanent(m, alpha, beta);
    const auto slow = naive_coeff(m, alpha, beta);
    if (fast.permanent == slow.permanent && fast.coeff_x == slow.coeff_x && fast.coeff_y == slow.coeff_y) {
      ++passed;
    } else if (counterexample.is_null()) {
      counterexample = {{"trial", t},
                        {"matrix", matrix_rows(m)},
                        {"alpha", alpha},
                        {"beta", beta},
                        {"permanent", format_rational(fast.permanent)},
                        {"naive_coeff_y", format_rational(slow.coeff_y)},
                        {"naive_coeff_x", format_rational(slow.coeff_x)}};
    }
  }
  Output out(a.out);
  const bool ok = passed == a.trials;
  out.stream() << Json{{"status", ok ? "pass" : "fail"},
                       {"trials", a.trials},
                       {"passed", passed},
                       {"seed", a.seed},
                       {"first_counterexample", counterexample}}
                      .dump()
               << '\n';
  return ok ? kExitOk : kExitNo;
}

// at-number, zp-cert ------------------------------------------------------

int run_at_number(const std::string& path) {
  std::cout << at_number(io::load_graph(path)) << '\n';
  return kExitOk;
}

struct ZpArgs {
  std::string graph;
  int p = 3;
  std::string certificate;
  bool verify = false;
};

int run_zp(const ZpArgs& a) {
  const Graph g = io::load_graph(a.graph);
  const auto cert = io::zp_certificate_from_json(io::load_json(a.certificate));
  const bool accepted = zp_certificate(g, a.p, cert.arcs, cert.root);
  Json report = {{"p", a.p}, {"u", cert.root}, {"arcs", cert.arcs.size()}, {"accepted", accepted}};
  if (static_cast<long>(cert.arcs.size()) == static_cast<long>(a.p - 1) * (g.num_vertices() - 1)) {
    report["eulerian_diff"] = eulerian_diff(Orientation(g.num_vertices(), cert.arcs));
  }
  if (a.verify) {
    // Every zero-sum boundary must be realisable by a nowhere-zero b-flow.
    const int n = g.num_vertices();
    std::vector<int> b(n, 0);
    long realised = 0;
    long total = 0;
    bool more = n > 0;
    while (more) {
      int sum = 0;
      for (int v = 0; v + 1 < n; ++v) sum += b[v];
      b[n - 1] = ((-sum) % a.p + a.p) % a.p;
      ++total;
      if (find_b_flow(g, a.p, b)) ++realised;
      more = false;
      for (int v = 0; v + 1 < n; ++v) {
        if (++b[v] < a.p) {
          more = true;
          break;
        }
        b[v] = 0;
      }
    }
    report["boundaries"] = total;
    report["realised"] = realised;
  }
  std::cout << report.dump() << '\n';
  return accepted ? kExitOk : kExitNo;
}

// experiment --------------------------------------------------------------

struct ExperimentArgs {
  std::string bound = "third";
  int trials = 200;
  std::uint64_t seed = 0;
  int n_min = 0;  // 0 = regime default
  int n_max = 8;
  std::string probabilities = "0.3,0.5,0.8";
  std::string corpus = "conditioned";
  std::string gamma = "1/10";
  int max_attempts = 200;
  int max_edges = 28;
  bool timing = false;
  std::string out;
  std::string csv;
};

struct Instance {
  Graph g;
  Orientation d;  // two-thirds regime only
  std::vector<int> bound;
};

std::vector<int> regime_bound(const std::string& bound, const Graph& g, const Orientation& d, const Rational& gamma) {
  std::vector<int> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (bound == "third") {
      out[v] = third_guarantee(g.degree(v));
    } else if (bound == "two-thirds") {
      out[v] = two_thirds_guarantee(d.out_degree(v));
    } else {
      out[v] = static_cast<int>(random_guarantee(gamma, g.degree(v)));
    }
  }
  return out;
}

Instance draw_instance(const ExperimentArgs& a, const Rational& gamma, int n, double p, std::mt19937_64& rng) {
  constexpr long kMaxDraws = 2'000'000;
  for (long draw = 0; draw < kMaxDraws; ++draw) {
    Instance inst;
    inst.g = random_gnp(n, p, rng);
    if (a.bound == "two-thirds") inst.d = random_orientation(inst.g, rng);
    inst.bound = regime_bound(a.bound, inst.g, inst.d, gamma);
    if (a.corpus == "raw" || *std::min_element(inst.bound.begin(), inst.bound.end()) >= 0) return inst;
  }
  throw std::runtime_error("experiment: no instance with n = " + std::to_string(n) +
                           " satisfies the bound hypothesis; raise --n-min or use --corpus raw");
}

int run_experiment(const ExperimentArgs& a) {
  if (a.bound != "third" && a.bound != "two-thirds" && a.bound != "random")
    throw std::invalid_argument("experiment: --bound must be third, two-thirds or random");
  if (a.corpus != "conditioned" && a.corpus != "raw")
    throw std::invalid_argument("experiment: --corpus must be conditioned or raw");
  const int n_min = a.n_min > 0 ? a.n_min : (a.bound == "two-thirds" ? 6 : 4);
  if (n_min > a.n_max) throw std::invalid_argument("experiment: --n-min exceeds --n-max");
  std::vector<double> probs;
  {
    std::stringstream in(a.probabilities);
    std::string item;
    while (std::getline(in, item, ',')) probs.push_back(std::stod(item));
  }
  if (probs.empty()) throw std::invalid_argument("experiment: need at least one edge probability");
  const Rational gamma = parse_rational(a.gamma);

  Output out(a.out);
  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv);
    if (!csv) throw std::runtime_error("cannot write '" + a.csv + "'");
    csv << "instance,n,m,p,hypothesis,constructed,weight_bound_ok,certificate_valid,oracle,min_slack\n";
  }

  std::mt19937_64 rng(a.seed);
  int hypothesis_count = 0;
  int valid_count = 0;
  int sat_count = 0;
  int weight_ok_count = 0;
  int constructed_count = 0;
  for (int i = 0; i < a.trials; ++i) {
    const double p = probs[i % probs.size()];
    const int n = uniform_int(rng, n_min, a.n_max);
    const Instance inst = draw_instance(a, gamma, n, p, rng);
    const Graph& g = inst.g;
    const bool hypothesis = *std::min_element(inst.bound.begin(), inst.bound.end()) >= 0;

    const auto t0 = std::chrono::steady_clock::now();
    std::optional<Construction> c;
    if (a.bound == "third") {
      c = build_h_third(g);
    } else if (a.bound == "two-thirds") {
      c = build_h_two_thirds(g, inst.d);
    } else {
      RandomOptions opts;
      opts.gamma = gamma;
      opts.seed = rng();
      opts.max_attempts = a.max_attempts;
      const auto result = build_h_random(g, opts);
      if (const auto* ok = std::get_if<RandomSuccess>(&result)) c = ok->construction;
    }
    const auto t1 = std::chrono::steady_clock::now();

    std::vector<int> sizes(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) sizes[v] = uniform_int(rng, 0, std::max(0, inst.bound[v]));
    std::vector<std::vector<int>> sets(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<int> pool(g.degree(v) + 1);
      for (int k = 0; k <= g.degree(v); ++k) pool[k] = k;
      for (int s = 0; s < sizes[v]; ++s) {
        std::swap(pool[s], pool[uniform_int(rng, s, g.degree(v))]);
        sets[v].push_back(pool[s]);
      }
    }
    const ForbiddenSets f(g, ForbiddenMode::OutDegree, sets);

    Json record = {{"instance", i}, {"n", g.num_vertices()}, {"m", g.num_edges()}, {"p", p},
                   {"bound", a.bound}, {"hypothesis", hypothesis}, {"constructed", c.has_value()}};
    bool weight_ok = false;
    bool valid = false;
    long min_slack = 0;
    if (c) {
      ++constructed_count;
      const auto w = certificate_weights(g, c->ordering, c->h);
      weight_ok = true;
      for (Vertex v = 0; v < g.num_vertices(); ++v) weight_ok = weight_ok && w[v] >= inst.bound[v];
      const auto cert = certify_h_condition(g, c->ordering, c->h, f);
      valid = cert.valid;
      std::map<long, int> histogram;
      for (long s : cert.slack) ++histogram[s];
      Json hist = Json::object();
      for (const auto& [s, count] : histogram) hist[std::to_string(s)] = count;
      min_slack = cert.slack.empty() ? 0 : *std::min_element(cert.slack.begin(), cert.slack.end());
      record["weight_bound_ok"] = weight_ok;
      record["certificate_valid"] = valid;
      record["min_slack"] = min_slack;
      record["slack_histogram"] = hist;
    }
    std::string verdict;
    try {
      verdict = find_orientation(g, f, SearchLimits{a.max_edges}) ? "SAT" : "UNSAT";
    } catch (const GuardExceeded&) {
      verdict = "GUARD";
    }
    const auto t2 = std::chrono::steady_clock::now();
    record["oracle"] = verdict;
    if (a.timing) {
      record["construct_seconds"] = std::chrono::duration<double>(t1 - t0).count();
      record["oracle_seconds"] = std::chrono::duration<double>(t2 - t1).count();
    }
    out.stream() << record.dump() << '\n';
    if (csv.is_open()) {
      csv << i << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << p << ',' << hypothesis << ','
          << c.has_value() << ',' << weight_ok << ',' << valid << ',' << verdict << ',' << min_slack << '\n';
    }
    if (hypothesis) {
      ++hypothesis_count;
      if (valid) ++valid_count;
    }
    if (weight_ok) ++weight_ok_count;
    if (verdict == "SAT") ++sat_count;
  }
  if (a.trials > 0) {
    const auto rate = [](int k, int total) { return total == 0 ? 0.0 : static_cast<double>(k) / total; };
    out.stream() << Json{{"summary",
                          {{"instances", a.trials},
                           {"constructed", constructed_count},
                           {"hypothesis_instances", hypothesis_count},
                           {"certificate_valid_rate", rate(valid_count, hypothesis_count)},
                           {"weight_bound_rate", rate(weight_ok_count, constructed_count)},
                           {"oracle_sat_rate", rate(sat_count, a.trials)}}}}
                        .dump()
                 << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify orientations that avoid forbidden out-degrees"};
  app.require_subcommand(1);
  app.footer("Set " + std::string(kGuardOverrideEnv) + "=1 to lift enumeration guards (unsafe: exponential time).");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("kind", gen.kind, "complete | complete-minus-matching | cycle | random-gnp | random-bipartite")
      ->required();
  gen_cmd->add_option("params", gen.params, "n | n p | left right p")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--format", gen.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  gen_cmd->add_option("-o,--output", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Search for an F-avoiding orientation (exit 0 SAT, 1 UNSAT, 2 guard)");
  solve_cmd->add_option("graph", solve.graph)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("forbidden", solve.forbidden)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--mode", solve.mode, "Override the file's mode")->check(CLI::IsMember({"outdeg", "imbalance"}));
  solve_cmd->add_option("--format", solve.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  solve_cmd->add_option("--max-edges", solve.max_edges, "Edge guard for the search");
  solve_cmd->add_option("-o,--output", solve.out);

  CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Recompute slack for an (ordering, H) certificate");
  certify_cmd->add_option("graph", certify.graph)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("certificate", certify.certificate)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("forbidden", certify.forbidden, "Forbidden sets (default: all empty)")
      ->check(CLI::ExistingFile);
  certify_cmd->add_option("-o,--output", certify.out);

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build an (ordering, H) certificate");
  construct_cmd->add_option("graph", construct.graph)->required()->check(CLI::ExistingFile);
  construct_cmd->add_option("--bound", construct.bound, "third | two-thirds | random")
      ->check(CLI::IsMember({"third", "two-thirds", "random"}));
  construct_cmd->add_option("--gamma", construct.gamma, "Slack parameter for --bound random, e.g. 1/10");
  construct_cmd->add_option("--seed", construct.seed);
  construct_cmd->add_option("--max-attempts", construct.max_attempts);
  construct_cmd->add_option("--orientation", construct.orientation, "Orientation JSON for --bound two-thirds")
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--forbidden", construct.forbidden, "Forbidden sets to certify against")
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--order", construct.order, "Comma-separated vertex ordering for --bound third");
  construct_cmd->add_option("-o,--output", construct.out);

  DualityArgs duality;
  auto* duality_cmd = app.add_subcommand("duality-check", "Compare permanent and naive dual coefficients");
  duality_cmd->add_option("--size", duality.size, "Largest matrix dimension");
  duality_cmd->add_option("--trials", duality.trials);
  duality_cmd->add_option("--seed", duality.seed);
  duality_cmd->add_option("-o,--output", duality.out);

  std::string at_graph;
  auto* at_cmd = app.add_subcommand("at-number", "Alon-Tarsi number of a graph");
  at_cmd->add_option("graph", at_graph)->required()->check(CLI::ExistingFile);

  ZpArgs zp;
  auto* zp_cmd = app.add_subcommand("zp-cert", "Check a Z_p-connectivity certificate");
  zp_cmd->add_option("graph", zp.graph)->required()->check(CLI::ExistingFile);
  zp_cmd->add_option("p", zp.p)->required()->check(CLI::IsMember({3, 5, 7}));
  zp_cmd->add_option("certificate", zp.certificate)->required()->check(CLI::ExistingFile);
  zp_cmd->add_flag("--verify", zp.verify, "Also search a b-flow for every zero-sum boundary");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Sweep random graphs and report one JSON record per instance");
  exp_cmd->add_option("--bound", exp.bound)->check(CLI::IsMember({"third", "two-thirds", "random"}));
  exp_cmd->add_option("--trials", exp.trials);
  exp_cmd->add_option("--seed", exp.seed);
  exp_cmd->add_option("--n-min", exp.n_min, "Smallest vertex count (default 4, or 6 for two-thirds)");
  exp_cmd->add_option("--n-max", exp.n_max);
  exp_cmd->add_option("--p", exp.probabilities, "Comma-separated edge probabilities, cycled");
  exp_cmd->add_option("--corpus", exp.corpus, "conditioned | raw")->check(CLI::IsMember({"conditioned", "raw"}));
  exp_cmd->add_option("--gamma", exp.gamma);
  exp_cmd->add_option("--max-attempts", exp.max_attempts);
  exp_cmd->add_option("--max-edges", exp.max_edges, "Edge guard for the oracle");
  exp_cmd->add_flag("--timing", exp.timing, "Include wall-clock fields (breaks byte-identical reruns)");
  exp_cmd->add_option("-o,--output", exp.out);
  exp_cmd->add_option("--csv", exp.csv, "Also write a CSV table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*certify_cmd) return run_certify(certify);
    if (*construct_cmd) return run_construct(construct);
    if (*duality_cmd) return run_duality(duality);
    if (*at_cmd) return run_at_number(at_graph);
    if (*zp_cmd) return run_zp(zp);
    if (*exp_cmd) return run_experiment(exp);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
