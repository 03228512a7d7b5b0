#ifndef PSOLAB_LAB_HPP
#define PSOLAB_LAB_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace psolab {

/// Single-particle recurrence variants over a 1-dimensional space with two
/// stationary attractors.
enum class LabMode {
    Deterministic, // random weights removed: v' = w*v + (iw+sw)*(p - x)
    Average,       // draws replaced by their mean 0.5
    Stochastic     // fresh uniform draws per term
};

struct LabConfig {
    double w = 1.0;
    double iw = 2.0;
    double sw = 2.0;
    LabMode mode = LabMode::Deterministic;
    double pbest = 0.0;
    double gbest = 0.0;
    double x0 = 100.0;
    double v0 = 0.0;
    std::optional<double> vmax;
    int steps = 4000;
    std::uint64_t seed = 0; // stochastic mode only
};

struct TrajectorySample {
    int t = 0;
    double x = 0.0;
    double v = 0.0;
};

enum class TrajectoryClass { Cyclic, QuasiCyclic, Divergent, Convergent, Undetermined };

std::string_view trajectory_class_name(TrajectoryClass c);

struct Trajectory {
    std::vector<TrajectorySample> samples; // steps + 1 entries, t = 0 first
    TrajectoryClass classification = TrajectoryClass::Undetermined;
};

/// Fixed point of the two stationary attractors:
/// p = (iw*pbest + sw*gbest) / (iw + sw).
double attractor(double iw, double sw, double pbest, double gbest);

/// Iterates the configured recurrence, records every (t, x, v) and
/// classifies the result.
Trajectory run_lab(const LabConfig& config);

/// Classifies a recorded trajectory against the attractor p. Divergent when
/// the late excursion from p exceeds bound_factor times the early one (or
/// bound_factor times the initial displacement scale, which catches linear
/// growth); Convergent when x and v settle onto p; Cyclic when some period
/// up to period_max repeats; QuasiCyclic when bounded but aperiodic.
TrajectoryClass classify_trajectory(std::span<const TrajectorySample> samples,
                                    double p, double bound_factor = 10.0,
                                    int period_max = 64);

/// Eigenvalue magnitudes of the 2x2 linear map (v, x-p) -> (v', x'-p) with
/// v' = w*v - aw_effective*(x-p) and x' = x + v'.
std::pair<double, double> stability_spectrum(double w, double aw_effective);

} // namespace psolab

#endif
