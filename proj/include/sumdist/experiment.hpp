#ifndef SUMDIST_EXPERIMENT_HPP
#define SUMDIST_EXPERIMENT_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumdist/exact.hpp"
#include "sumdist/genx.hpp"
#include "sumdist/randlabel.hpp"

// Seeded batch experiments driven by a JSON config (format in README.md).
// Instance i is generated from derive_seed(seed, i), so reports do not
// depend on evaluation order.

namespace sumdist {

namespace detail {

inline std::vector<std::uint64_t> as_list(const nlohmann::json& j) {
  if (j.is_array()) return j.get<std::vector<std::uint64_t>>();
  return {j.get<std::uint64_t>()};
}

/// "7/2", 3 or 3.5
inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return Rational(j.get<double>());
  throw DomainError("expected a rational number");
}

inline nlohmann::ordered_json summarize(std::vector<double> values) {
  nlohmann::ordered_json s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  const double median = k % 2 ? values[k / 2] : (values[k / 2 - 1] + values[k / 2]) / 2;
  s["count"] = k;
  s["min"] = values.front();
  s["median"] = median;
  s["max"] = values.back();
  return s;
}

// Smallest N for which brute force finds a labeling, capped at ceiling + 1,
// if N^n stays under the oracle guard. Feasibility is monotone in N.
inline std::optional<Label> oracle_s(const Hypergraph& h, Label ceiling) {
  if (static_cast<double>(h.vertex_count()) * std::log10(static_cast<double>(ceiling)) > 8.0) return std::nullopt;
  if (!oracle_enumerate(h, ceiling)) return ceiling + 1;
  Label n = ceiling;
  while (n > 1 && oracle_enumerate(h, n - 1)) --n;
  return n;
}

}  // namespace detail

struct ExperimentOptions {
  bool timing = false;  // adds wall time, which breaks byte-for-byte reproducibility
};

inline nlohmann::ordered_json run_experiment(const nlohmann::json& config, const ExperimentOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::string generator = config.at("generator").get<std::string>();
  const std::string measure = config.value("measure", std::string("exact_s"));
  const std::uint64_t seed = config.value("seed", std::uint64_t{0xD15C0});
  const std::uint64_t budget = config.value("budget", SolveOptions{}.node_budget);

  struct Task {
    Hypergraph h;
    std::uint64_t seed;
    std::optional<Label> reference;
  };
  std::vector<Task> tasks;
  if (generator == "complete") {
    for (std::uint64_t n : detail::as_list(config.at("n")))
      tasks.push_back({complete_hypergraph(n), 0, Label{1} << (n - 1)});
  } else {
    const std::uint64_t count = config.value("seeds", std::uint64_t{1});
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t s = derive_seed(seed, i);
      if (generator == "runiform") {
        tasks.push_back({gen_runiform(config.at("N").get<std::uint64_t>(), config.at("r").get<std::uint64_t>(),
                                      config.at("p").get<double>(), s),
                         s, std::nullopt});
      } else if (generator == "random") {
        tasks.push_back({gen_random_hypergraph(config.at("n").get<std::uint64_t>(), config.at("m").get<std::uint64_t>(),
                                               config.value("density", 0.5), s),
                         s, std::nullopt});
      } else if (generator == "lowerbound") {
        tasks.push_back({lower_bound_instance(config.at("n").get<std::uint64_t>(), config.at("m").get<std::uint64_t>(),
                                              config.at("eps").get<double>(), s, config.value("delta", 0.1))
                             .hypergraph,
                         s, std::nullopt});
      } else {
        throw DomainError("unknown generator '" + generator + "'");
      }
    }
  }

  nlohmann::ordered_json report;
  report["config"] = config;
  report["instances"] = nlohmann::ordered_json::array();
  std::vector<double> values;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    nlohmann::ordered_json row;
    row["task"] = i;
    if (generator != "complete") row["seed"] = t.seed;
    row["vertices"] = t.h.vertex_count();
    row["edges"] = t.h.edge_count();
    if (measure == "edges") {
      values.push_back(static_cast<double>(t.h.edge_count()));
    } else if (measure == "exact_s") {
      SolveOptions so;
      so.node_budget = budget;
      const SolveResult r = exact_s(t.h, so);
      row["s"] = r.optimum;
      row["witness"] = r.witness.values();
      row["nodes"] = r.nodes_expanded;
      if (t.reference) {
        row["reference"] = *t.reference;
        row["matches_reference"] = r.optimum == *t.reference;
      }
      if (t.h.vertex_count() <= 6) {
        if (auto o = detail::oracle_s(t.h, r.optimum)) {
          row["oracle_s"] = *o;
          row["matches_oracle"] = *o == r.optimum;
        }
      }
      values.push_back(static_cast<double>(r.optimum));
    } else if (measure == "quadratic") {
      const auto r = quadratic_random_labeling(t.h, derive_seed(t.seed, 1), config.value("attempts", std::uint64_t{64}));
      row["attempts"] = r.attempts;
      row["max_label"] = r.labeling.max_label();
      row["verified"] = is_distinguishing(t.h, r.labeling);
      values.push_back(static_cast<double>(r.attempts));
    } else if (measure == "two_step") {
      TwoStepConfig cfg;
      if (config.contains("C")) cfg.c = detail::rational_from_json(config.at("C"));
      cfg.k = config.value("K", cfg.k);
      cfg.p = config.value("P", cfg.p);
      cfg.step1_budget = config.value("step1_budget", cfg.step1_budget);
      cfg.step2_budget = config.value("step2_budget", cfg.step2_budget);
      cfg.seed = derive_seed(t.seed, 2);
      try {
        const auto r = two_step_labeling(t.h, cfg);
        row["success"] = true;
        row["max_label"] = r.labeling.max_label();
        row["label_bound"] = r.label_bound;
        row["popular"] = r.popular;
        row["step1_attempts"] = r.step1_attempts;
        row["step2_attempts"] = r.step2_attempts;
        row["verified"] = is_distinguishing(t.h, r.labeling);
        values.push_back(static_cast<double>(r.step2_attempts));
      } catch (const TwoStepExhausted& e) {
        row["success"] = false;
        row["step1_attempts"] = e.stats().step1_attempts;
      }
    } else {
      throw DomainError("unknown measure '" + measure + "'");
    }
    report["instances"].push_back(std::move(row));
  }
  report["summary"] = detail::summarize(std::move(values));
  if (opt.timing)
    report["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sumdist

#endif
