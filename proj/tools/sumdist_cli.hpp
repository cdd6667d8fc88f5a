#ifndef SUMDIST_TOOLS_CLI_HPP
#define SUMDIST_TOOLS_CLI_HPP

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumdist/construct.hpp"
#include "sumdist/exact.hpp"
#include "sumdist/experiment.hpp"
#include "sumdist/genx.hpp"
#include "sumdist/io.hpp"
#include "sumdist/prob.hpp"
#include "sumdist/randlabel.hpp"

namespace sumdist::cli {

using nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 0xD15C0;

enum Exit : int { kOk = 0, kInfeasible = 1, kUsage = 2, kInternal = 3 };

namespace detail {

inline std::string render_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ' ';
      s += render_value(x);
    }
    return s;
  }
  return v.dump();
}

// One "key: value" line per field; nested objects are flattened with dots.
inline void render_text(const ordered_json& j, std::ostream& out, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    if (it->is_object()) {
      render_text(*it, out, key + ".");
    } else if (it->is_array() && !it->empty() && it->front().is_object()) {
      std::size_t i = 0;
      for (const auto& row : *it) render_text(row, out, key + "[" + std::to_string(i++) + "].");
    } else {
      out << key << ": " << render_value(*it) << '\n';
    }
  }
}

inline std::string rational_string(const prob::Rational& r) {
  std::ostringstream s;
  s << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) s << '/' << boost::multiprecision::denominator(r);
  return s.str();
}

inline std::string long_double_string(long double x) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<long double>::digits10 + 2) << x;
  return s.str();
}

inline ordered_json labeling_report(const Hypergraph& h, const Labeling& f) {
  return io::labeling_json(f, is_distinguishing(h, f));
}

inline ordered_json labeling_report(const Graph& g, const Labeling& f) {
  return io::labeling_json(f, is_vertex_sum_distinguishing(g, f));
}

inline ordered_json solve_report(const SolveResult& r, bool verified) {
  ordered_json j;
  j["optimum"] = r.optimum;
  j["witness"] = r.witness.values();
  j["nodes"] = r.nodes_expanded;
  j["start_bound"] = r.start_bound;
  j["verified"] = verified;
  return j;
}

inline ordered_json edges_json(const Hypergraph& h) {
  ordered_json e = ordered_json::array();
  for (const Edge& x : h.edges()) e.push_back(x);
  return e;
}

}  // namespace detail

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 infeasible or budget exhausted, 2 usage, parse
/// or validation error, 3 internal error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-distinguishing labelings of hypergraphs", "sumdist"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::optional<ordered_json> report;
  std::string raw;  // printed verbatim when set (hypergraph text)
  int status = kOk;

  // solve
  auto* solve = app.add_subcommand("solve", "Exact s(H), s*(G) or irr(H)");
  std::string problem, file;
  std::uint64_t node_budget = SolveOptions{}.node_budget;
  solve->add_option("problem", problem, "s | sstar | irr")->required()->check(CLI::IsMember({"s", "sstar", "irr"}));
  solve->add_option("file", file, ".hg file (s, irr) or .g file (sstar)")->required();
  solve->add_option("--budget", node_budget, "Search node budget")->check(CLI::PositiveNumber);
  solve->callback([&] {
    SolveOptions opt;
    opt.node_budget = node_budget;
    const std::string text = io::read_file(file);
    if (problem == "sstar") {
      const Graph g = io::parse_graph(text);
      const SolveResult r = exact_s_star(g, opt);
      report = detail::solve_report(r, is_vertex_sum_distinguishing(g, r.witness));
    } else {
      const Hypergraph h = io::parse_hypergraph(text);
      if (problem == "s") {
        const SolveResult r = exact_s(h, opt);
        report = detail::solve_report(r, is_distinguishing(h, r.witness));
      } else {
        const DualResult d = dual(h);
        const SolveResult r = exact_s(d.hypergraph, opt);
        report = detail::solve_report(r, is_distinguishing(d.hypergraph, r.witness));
        if (!d.skipped.empty()) (*report)["skipped_vertices"] = d.skipped;
      }
    }
    (*report)["problem"] = problem;
  });

  // label
  auto* label = app.add_subcommand("label", "Construct a labeling");
  label->require_subcommand(1);
  std::uint64_t seed = kDefaultSeed;
  std::string c_text = "4";
  TwoStepConfig ts;
  std::optional<std::uint64_t> budget, step1_budget, step2_budget;

  auto* quad = label->add_subcommand("quadratic", "Uniform labels on [m^2], verify and retry");
  quad->add_option("file", file, ".hg file")->required();
  quad->add_option("--seed", seed, "Random seed");
  quad->add_option("--budget", budget, "Attempts")->check(CLI::PositiveNumber);
  quad->callback([&] {
    const Hypergraph h = io::parse_hypergraph(io::read_file(file));
    const auto r = quadratic_random_labeling(h, seed, budget.value_or(64));
    report = detail::labeling_report(h, r.labeling);
    (*report)["seed"] = seed;
    (*report)["attempts"] = r.attempts;
    (*report)["label_bound"] = h.edge_count() * h.edge_count();
  });

  auto* two = label->add_subcommand("two-step", "Two-step labeler with labels in [ceil(m^2/C)]");
  two->add_option("file", file, ".hg file")->required();
  two->add_option("--C", c_text, "Constant C (integer or fraction a/b)");
  two->add_option("--K", ts.k, "Dangerous-pair threshold K");
  two->add_option("--P", ts.p, "Newly-dangerous threshold P");
  two->add_option("--seed", seed, "Random seed");
  two->add_option("--budget", budget, "Both Step 1 and Step 2 budgets")->check(CLI::PositiveNumber);
  two->add_option("--step1-budget", step1_budget, "Step 1 draws")->check(CLI::PositiveNumber);
  two->add_option("--step2-budget", step2_budget, "Step 2 draws per successful Step 1")->check(CLI::PositiveNumber);
  two->callback([&] {
    try {
      ts.c = prob::Rational(c_text);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--C", "not a rational number: " + c_text);
    }
    ts.seed = seed;
    ts.step1_budget = step1_budget.value_or(budget.value_or(ts.step1_budget));
    ts.step2_budget = step2_budget.value_or(budget.value_or(ts.step2_budget));
    ts.validate();
    const Hypergraph h = io::parse_hypergraph(io::read_file(file));
    auto stats = [&](const TwoStepResult& r) {
      ordered_json s;
      s["label_bound"] = r.label_bound;
      s["popular"] = r.popular;
      s["step1_attempts"] = r.step1_attempts;
      s["step1_successes"] = r.step1_successes;
      s["step2_attempts"] = r.step2_attempts;
      ordered_json census;
      const char* names[] = {"a", "b", "c", "d", "e"};
      for (int i = 0; i < 5; ++i) census[names[i]] = r.census[i];
      s["census"] = census;
      return s;
    };
    ordered_json params;
    params["C"] = detail::rational_string(ts.c);
    params["K"] = ts.k;
    params["P"] = ts.p;
    params["seed"] = seed;
    params["step1_budget"] = ts.step1_budget;
    params["step2_budget"] = ts.step2_budget;
    try {
      const TwoStepResult r = two_step_labeling(h, ts);
      report = detail::labeling_report(h, r.labeling);
      (*report)["params"] = params;
      (*report)["stats"] = stats(r);
    } catch (const TwoStepExhausted& e) {
      ordered_json j;
      j["error"] = e.what();
      j["params"] = params;
      j["stats"] = stats(e.stats());
      report = j;
      status = kInfeasible;
    }
  });

  auto* rep = label->add_subcommand("repair", "Deterministic repair labeler for closed-neighborhood sums");
  rep->add_option("file", file, ".g file")->required();
  rep->callback([&] {
    const Graph g = io::parse_graph(io::read_file(file));
    const RepairResult r = repair_labeler(g);
    report = detail::labeling_report(g, r.labeling);
    (*report)["xi"] = r.xi;
    (*report)["iterations"] = r.trace.size();
  });

  auto* tree = label->add_subcommand("tree", "Inductive tree labeler");
  tree->add_option("file", file, ".g file holding a tree")->required();
  tree->callback([&] {
    const Graph t = io::parse_graph(io::read_file(file));
    const Labeling f = tree_labeler(t);
    const LeafStat ls = leaf_stat(t);
    report = detail::labeling_report(t, f);
    (*report)["leaf_stat"] = ls.leaves;
    (*report)["bound"] = 2 * t.vertex_count() - 2 - ls.leaves;
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Degree bounds on s*(G)");
  bounds->add_option("file", file, ".g file")->required();
  bounds->callback([&] {
    const DegreeBoundsReport b = s_star_bounds(io::parse_graph(io::read_file(file)));
    ordered_json j;
    j["distinct_neighborhoods"] = b.distinct_neighborhoods;
    j["min_degree"] = b.min_degree;
    j["max_degree"] = b.max_degree;
    j["lower"] = b.lower;
    j["xi"] = b.xi;
    j["upper_loose"] = b.upper_loose;
    report = j;
  });

  // dual
  auto* dualc = app.add_subcommand("dual", "Dual hypergraph");
  std::string out_path;
  dualc->add_option("file", file, ".hg file")->required();
  dualc->add_option("--out", out_path, "Write the dual as .hg here");
  dualc->callback([&] {
    const DualResult d = dual(io::parse_hypergraph(io::read_file(file)));
    if (!d.skipped.empty()) err << "warning: skipped " << d.skipped.size() << " uncovered vertices\n";
    if (!out_path.empty()) io::write_file(out_path, io::serialize(d.hypergraph));
    ordered_json j;
    j["vertices"] = d.hypergraph.vertex_count();
    j["edges"] = detail::edges_json(d.hypergraph);
    j["source_vertex"] = d.source_vertex;
    j["skipped"] = d.skipped;
    report = j;
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Random instances");
  gen->require_subcommand(1);
  std::uint64_t gn = 0, gm = 0, gr = 0;
  double gp = 0, eps = 0, delta = 0.1;
  auto emit_instance = [&](const Hypergraph& h, ordered_json meta) {
    meta["seed"] = seed;
    meta["vertices"] = h.vertex_count();
    meta["edge_count"] = h.edge_count();
    if (out_path.empty()) {
      raw = io::serialize(h);
    } else {
      io::write_file(out_path, io::serialize(h));
      meta["out"] = out_path;
      report = meta;
    }
  };
  auto* runi = gen->add_subcommand("runiform", "Each r-subset of [N] independently with probability p");
  runi->add_option("--N", gn, "Vertices")->required();
  runi->add_option("--r", gr, "Edge size")->required();
  runi->add_option("--p", gp, "Edge probability")->required();
  runi->add_option("--seed", seed, "Random seed");
  runi->add_option("--out", out_path, "Output .hg file (stdout if omitted)");
  runi->callback([&] {
    ordered_json meta;
    meta["generator"] = "runiform";
    emit_instance(gen_runiform(gn, gr, gp, seed), meta);
  });
  auto* lb = gen->add_subcommand("lowerbound", "Padded r-uniform instance with exactly n vertices and m edges");
  lb->add_option("--n", gn, "Vertices")->required();
  lb->add_option("--m", gm, "Edges")->required();
  lb->add_option("--eps", eps, "Exponent slack epsilon in (0,1)")->required();
  lb->add_option("--delta", delta, "Core-size exponent slack");
  lb->add_option("--seed", seed, "Random seed");
  lb->add_option("--out", out_path, "Output .hg file (stdout if omitted)");
  lb->callback([&] {
    const LowerBoundInstance inst = lower_bound_instance(gn, gm, eps, seed, delta);
    ordered_json meta;
    meta["generator"] = "lowerbound";
    meta["r"] = inst.r;
    meta["core_vertices"] = inst.core_vertices;
    meta["edge_probability"] = inst.edge_probability;
    meta["sampled_edges"] = inst.sampled_edges;
    emit_instance(inst.hypergraph, meta);
    if (out_path.empty()) err << "r=" << inst.r << " core=" << inst.core_vertices << " seed=" << seed << '\n';
  });

  // pmf
  auto* pmf = app.add_subcommand("pmf", "Distribution of a sum of l uniforms on [N]");
  std::uint64_t ell = 0, sides = 0;
  std::vector<std::int64_t> window;
  std::optional<double> margin_c;
  pmf->add_option("l", ell, "Summands")->required()->check(CLI::PositiveNumber);
  pmf->add_option("N", sides, "Sides")->required()->check(CLI::PositiveNumber);
  pmf->add_option("--window", window, "Pr[lo <= sum <= hi]")->expected(2);
  pmf->add_option("--margin", margin_c, "Concentration margin for 2l summands at constant C")->check(CLI::PositiveNumber);
  pmf->callback([&] {
    ordered_json j;
    j["summands"] = ell;
    j["sides"] = sides;
    if (margin_c) {
      const prob::Lemma3Margin m = prob::lemma3_margin(ell, sides, *margin_c);
      j["C"] = *margin_c;
      j["margin"] = static_cast<double>(m.margin);
      j["max_probability"] = static_cast<double>(m.max_probability);
      j["argmax"] = m.argmax;
      j["mean"] = m.mean;
      j["certified"] = m.margin <= 1;
    } else {
      const prob::Pmf d = prob::sum_pmf(ell, sides);
      if (!window.empty()) {
        const prob::Probability p = d.window(window[0], window[1]);
        j["window"] = window;
        j["probability"] = static_cast<double>(p.value);
        if (p.exact) j["exact"] = detail::rational_string(*p.exact);
      } else {
        j["min_sum"] = d.min_sum();
        j["max_sum"] = d.max_sum();
        ordered_json probs = ordered_json::array();
        for (long double x : d.probabilities()) probs.push_back(static_cast<double>(x));
        j["probabilities"] = probs;
      }
    }
    report = j;
  });

  // experiment
  auto* exp = app.add_subcommand("experiment", "Seeded batch experiment from a JSON config");
  bool timing = false;
  exp->add_option("config", file, "Config JSON")->required();
  exp->add_flag("--timing", timing, "Include wall time");
  exp->callback([&] {
    nlohmann::json config;
    try {
      config = nlohmann::json::parse(io::read_file(file));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    report = run_experiment(config, {timing});
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Check a labeling against a .hg or .g file");
  std::string labeling_path;
  bool as_graph = false;
  ver->add_option("file", file, ".hg or .g file")->required();
  ver->add_option("labeling", labeling_path, "Labeling JSON")->required();
  ver->add_flag("--graph", as_graph, "Treat the input as a graph (default for the .g extension)");
  ver->callback([&] {
    const std::string text = io::read_file(file);
    nlohmann::json lj;
    try {
      lj = nlohmann::json::parse(io::read_file(labeling_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("labeling: ") + e.what());
    }
    const Labeling f = io::labeling_from_json(lj);
    const bool graph = as_graph || (file.size() >= 2 && file.compare(file.size() - 2, 2, ".g") == 0);
    report = graph ? detail::labeling_report(io::parse_graph(text), f)
                   : detail::labeling_report(io::parse_hypergraph(text), f);
    if (!(*report)["verified"].get<bool>()) status = kInfeasible;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (const auto* b = dynamic_cast<const BudgetExhausted*>(&e); b && b->upper() > 0)
      err << "bracket: [" << b->lower() << ", " << b->upper() << "]\n";
    return e.infeasible() ? kInfeasible : kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (!raw.empty()) out << raw;
  if (report) {
    if (format == "text") detail::render_text(*report, out);
    else out << report->dump() << '\n';
  }
  return status;
}

}  // namespace sumdist::cli

#endif
