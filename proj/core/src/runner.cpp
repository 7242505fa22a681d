#include "d2k/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "d2k/dihedral.hpp"
#include "d2k/errors.hpp"
#include "d2k/extension.hpp"
#include "d2k/trig.hpp"

namespace d2k {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& check_id, int k,
                          std::size_t coupling_index) {
  std::uint64_t z = splitmix64(base ^ fnv1a(check_id));
  z = splitmix64(z ^ static_cast<std::uint64_t>(k));
  return splitmix64(z ^ static_cast<std::uint64_t>(coupling_index + 1));
}

bool is_sampled_check(const std::string& id) {
  static const std::vector<std::string> structural = {
      "group_relations", "closed_power", "reflection_ladder", "rotated_anticommutators",
      "susy_bridge"};
  return std::find(structural.begin(), structural.end(), id) == structural.end();
}

struct TaskList {
  const RunConfig& config;
  std::vector<std::function<IdentityReport()>> tasks;

  bool selected(const std::string& id) const {
    return config.checks.empty() ||
           std::find(config.checks.begin(), config.checks.end(), id) != config.checks.end();
  }

  void add(const std::string& id, std::function<IdentityReport()> fn) {
    if (selected(id)) tasks.push_back(std::move(fn));
  }

  SamplingPlan plan_for(const std::string& id, int k, std::size_t coupling_index = 0) const {
    SamplingPlan plan;
    plan.n_samples = config.n_samples;
    plan.rng_seed = derive_seed(config.rng_seed, id, k, coupling_index);
    return plan;
  }
};

}  // namespace

std::vector<Coupling> default_couplings() {
  return {{0.3, 0.3}, {0.5, 1.5}, {1.7, 0.4}, {3.0, 2.25}, {5.0, 5.0}};
}

const std::vector<std::string>& known_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = {"group_relations", "closed_power", "reflection_ladder",
                                  "rotated_anticommutators"};
    for (const SumTag tag : all_sum_tags()) v.emplace_back(tag_name(tag));
    v.emplace_back("derivative_consistency");
    v.emplace_back("even_k_control");
    v.emplace_back("csc2_plain_even_k");
    v.emplace_back("gamma_equivalence");
    v.emplace_back("triple_path");
    v.emplace_back("susy_bridge");
    return v;
  }();
  return ids;
}

void validate(const RunConfig& config) {
  if (config.k_min < 1) throw ConfigError("k_min must be >= 1");
  if (config.k_min > config.k_max) throw ConfigError("k_min must not exceed k_max");
  if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (config.n_samples < 16) throw ConfigError("n_samples must be >= 16");
  if (!(config.omega >= 0.0)) throw ConfigError("omega must be non-negative");
  if (config.couplings.empty()) throw ConfigError("coupling grid must not be empty");

  const auto& known = known_check_ids();
  bool any_sampled = config.checks.empty();
  for (const auto& id : config.checks) {
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw ConfigError("unknown check id: " + id);
    any_sampled = any_sampled || is_sampled_check(id);
  }
  if (any_sampled && config.n_samples < 4L * config.k_max + 3L)
    throw ConfigError("n_samples must be >= 4*k_max+3 for the sampled identity checks");
}

RunReport run(const RunConfig& config, unsigned n_threads) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  TaskList list{config, {}};
  for (int k = config.k_min; k <= config.k_max; ++k) {
    if (config.odd_only && k % 2 == 0) continue;
    const DihedralParams dp{k};

    list.add("group_relations", [dp] { return verify_group_relations(dp); });
    list.add("closed_power", [dp] { return verify_closed_powers(dp); });
    list.add("reflection_ladder", [dp] { return verify_reflection_ladder_form(dp); });
    list.add("rotated_anticommutators", [dp] { return verify_rotated_anticommutators(dp); });

    if (k % 2 == 1) {
      for (const SumTag tag : all_sum_tags()) {
        const SumFamily family{tag, k};
        const SamplingPlan plan = list.plan_for(tag_name(tag), k);
        const double tol = config.tolerance;
        list.add(tag_name(tag), [family, plan, tol] { return verify_identity(family, plan, tol); });
      }
      const SamplingPlan dplan = list.plan_for("derivative_consistency", k);
      list.add("derivative_consistency",
               [k, dplan] { return verify_derivative_consistency(k, dplan); });
    } else {
      const SamplingPlan cplan = list.plan_for("even_k_control", k);
      list.add("even_k_control", [k, cplan] { return even_k_negative_control(k, cplan); });
      const SamplingPlan iplan = list.plan_for("csc2_plain_even_k", k);
      const double tol = config.tolerance;
      list.add("csc2_plain_even_k",
               [k, iplan, tol] { return even_k_csc2_informational(k, iplan, tol); });
    }

    for (std::size_t ci = 0; ci < config.couplings.size(); ++ci) {
      const ModelParams mp{k, config.couplings[ci].a, config.couplings[ci].b, config.omega, 1.0};
      const SamplingPlan gplan = list.plan_for("gamma_equivalence", k, ci);
      const double tol = config.tolerance;
      list.add("gamma_equivalence",
               [mp, gplan, tol] { return verify_gamma_equivalence(mp, gplan, tol); });
      const SamplingPlan tplan = list.plan_for("triple_path", k, ci);
      list.add("triple_path", [mp, tplan] { return verify_triple_path(mp, tplan); });
      list.add("susy_bridge", [mp] { return verify_susy_bridge(mp); });
    }
  }

  RunReport report;
  report.config = config;
  report.reports.resize(list.tasks.size());

  unsigned workers = n_threads == 0 ? std::thread::hardware_concurrency() : n_threads;
  workers = std::max(1u, std::min<unsigned>(workers, list.tasks.size() ? list.tasks.size() : 1));

  if (workers == 1) {
    for (std::size_t i = 0; i < list.tasks.size(); ++i) report.reports[i] = list.tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= list.tasks.size() || failed.load()) return;
        try {
          report.reports[i] = list.tasks[i]();
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const auto& rep : report.reports) {
    switch (rep.kind) {
      case CheckKind::Asserted:
        (rep.pass ? report.summary.pass : report.summary.fail)++;
        break;
      case CheckKind::ExpectedFailure:
        (rep.pass ? report.summary.expected_failure : report.summary.fail)++;
        break;
      case CheckKind::Informational:
        report.summary.informational++;
        break;
    }
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int exit_code(const RunReport& report) { return report.summary.fail > 0 ? 1 : 0; }

}  // namespace d2k
