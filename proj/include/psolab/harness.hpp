#ifndef PSOLAB_HARNESS_HPP
#define PSOLAB_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "psolab/benchmarks.hpp"
#include "psolab/schedules.hpp"
#include "psolab/swarm.hpp"

namespace psolab {

/// Either one homogeneous parameter set or a list of sub-swarms.
using OptimizerDef = std::variant<ParameterSet, std::vector<SubSwarmSpec>>;

struct OptimizerConfig {
    std::string name;
    OptimizerDef def;
};

struct ExperimentSpec {
    OptimizerConfig optimizer;
    ObjectiveSpec objective;
    int n_particles = 30;
    int n_runs = 20;
    int max_time_steps = 10000;
    std::uint64_t base_seed = 1; // run r uses seed base_seed + r
    bool stop_on_acceptable = true;
    VelocityInit velocity_init = VelocityInit::Zero;
    double velocity_init_magnitude = 0.0;
};

struct RunResult {
    std::uint64_t seed = 0;
    double final_conflict = 0.0;
    int termination_step = 0;
    bool success = false;
};

struct RunStatistics {
    double best_solution = 0.0;
    double worst_solution = 0.0;
    double mean_best = 0.0;
    double std_best = 0.0;
    double mean_time_steps = 0.0;
    double std_time_steps = 0.0;
    std::vector<RunResult> per_run;
};

/// Called after initialization and after every step of an observed run.
using StepObserver = std::function<void(const SwarmState&)>;

/// One seeded run: steps until the conflict drops strictly below the
/// acceptable error (when stop_on_acceptable) or until max_time_steps.
RunResult run_once(const ExperimentSpec& spec, int run_index,
                   const StepObserver& observer = nullptr);

/// n_runs independent runs with seeds base_seed + r, aggregated with
/// min/max/mean and sample standard deviation (n-1).
RunStatistics run_experiment(const ExperimentSpec& spec);

/// The four homogeneous settings and the two three-way multi-swarms, all
/// with vmax set to half the search-box width.
std::vector<OptimizerConfig> builtin_optimizers();

/// Builtin entry by name, or nullptr-like empty optional.
const OptimizerConfig* find_builtin(const std::vector<OptimizerConfig>& list,
                                    std::string_view name);

} // namespace psolab

#endif
