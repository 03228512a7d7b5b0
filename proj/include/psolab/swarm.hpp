#ifndef PSOLAB_SWARM_HPP
#define PSOLAB_SWARM_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "psolab/benchmarks.hpp"
#include "psolab/rng.hpp"
#include "psolab/schedules.hpp"

namespace psolab {

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest_position;
    double pbest_conflict = 0.0;

    friend bool operator==(const Particle&, const Particle&) = default;
};

struct SwarmState {
    std::vector<Particle> particles;
    std::vector<double> gbest_position;
    double gbest_conflict = 0.0;
    int time_step = 0;
    Prng rng;

    explicit SwarmState(std::uint64_t seed = 0) : rng(seed) {}

    friend bool operator==(const SwarmState&, const SwarmState&) = default;
};

enum class VelocityInit { Zero, UniformSymmetric };

/// Sub-swarm of a heterogeneous main swarm: `particle_count` consecutive
/// particles sharing one parameter set.
struct SubSwarmSpec {
    ParameterSet params;
    int particle_count = 0;
};

/// Positions uniform in the search box; velocities all zero or uniform in
/// [-magnitude, magnitude]; pbest set to the initial position and gbest to
/// the best initial pbest. Equal seeds give bit-identical states.
SwarmState initialize_swarm(const ObjectiveSpec& spec, int n_particles,
                            std::uint64_t seed,
                            VelocityInit velocity_init = VelocityInit::Zero,
                            double velocity_magnitude = 0.0);

/// Basic velocity update: v' = w*v + iw*U1*(pbest-x) + sw*U2*(gbest-x),
/// with fresh independent draws per component per term. Consumes exactly
/// 2*dimension draws, individuality before sociality per component.
std::vector<double> velocity_update(const Particle& particle,
                                    std::span<const double> gbest_position,
                                    double w, double iw, double sw,
                                    UniformSource& rng);

/// Constricted update: v' = chi*(v + iw*U1*(pbest-x) + sw*U2*(gbest-x)).
/// Same draw-order contract as velocity_update.
std::vector<double> constricted_velocity_update(const Particle& particle,
                                                std::span<const double> gbest_position,
                                                double chi, double iw, double sw,
                                                UniformSource& rng);

/// Each component clipped into [-vmax, vmax]; components already inside are
/// returned bit-identical.
std::vector<double> clamp_velocity(std::span<const double> v, double vmax);
void clamp_velocity_inplace(std::span<double> v, double vmax);

/// One synchronous time-step: per particle in index order resolve the
/// scheduled weights, update velocity (plain or constricted), clamp if a
/// vmax policy is active, move, evaluate, update pbest on strict
/// improvement; then recompute gbest from all pbests and advance time_step.
void step(SwarmState& state, const ObjectiveSpec& spec,
          const ParameterSet& params, int t_max);

/// Heterogeneous step: consecutive index ranges of the main swarm use their
/// own sub-swarm parameters, all sharing one synchronously updated gbest.
/// Sub-swarm particle counts must sum to the swarm size.
void step_multiswarm(SwarmState& state, const ObjectiveSpec& spec,
                     std::span<const SubSwarmSpec> sub_swarms, int t_max);

/// Draw injected for particle i, component j, term 0 (individuality) or
/// term 1 (sociality).
using DrawFn = std::function<double(int particle, int dim, int term)>;

/// Test seam: one step with an explicit particle processing order and
/// injected draws instead of the state generator.
void step_with_draws(SwarmState& state, const ObjectiveSpec& spec,
                     std::span<const SubSwarmSpec> sub_swarms, int t_max,
                     std::span<const int> order, const DrawFn& draws);

/// Splits `total` particles over the given parameter sets as evenly as
/// possible, earlier sub-swarms taking the remainder.
std::vector<SubSwarmSpec> split_evenly(std::span<const ParameterSet> params, int total);

/// Trajectory dump rows: t, i, x_0..x_{d-1}, v_0..v_{d-1}, pbest_conflict,
/// gbest_conflict; one row per particle.
void write_trajectory_header(std::ostream& out, int dimension);
void append_trajectory_rows(std::ostream& out, const SwarmState& state);

} // namespace psolab

#endif
