#ifndef PSOLAB_SCHEDULES_HPP
#define PSOLAB_SCHEDULES_HPP

#include <optional>
#include <string_view>
#include <utility>

namespace psolab {

enum class ScheduleKind { Constant, LinearDecreasing, Sigmoid, PolynomialCorrelated };

/// Time-dependent weight. `max_time_steps` is the default horizon used when
/// the schedule is sampled standalone; the engine passes its own horizon.
struct ScheduleSpec {
    ScheduleKind kind = ScheduleKind::Constant;
    double value_start = 0.0;
    double value_end = 0.0;
    double steepness_k = 0.0; // sigmoid only
    int max_time_steps = 1;

    static ScheduleSpec constant(double v);
    static ScheduleSpec linear(double start, double end, int t_max = 1);
    static ScheduleSpec sigmoid(double start, double end, double k, int t_max = 1);
    /// Learning-weight schedule that tracks the inertia schedule through the
    /// fitted aw(w) polynomial; resolved by resolve_weights, not standalone.
    static ScheduleSpec poly_correlated();
};

std::string_view schedule_kind_name(ScheduleKind k);
std::optional<ScheduleKind> schedule_kind_from_name(std::string_view name);

/// Value of a Constant, LinearDecreasing or Sigmoid schedule at step t of
/// t_max. PolynomialCorrelated has no standalone value and is rejected.
double weight_at(const ScheduleSpec& schedule, int t, int t_max);

/// Fitted fourth-degree polynomial mapping an inertia weight in [0,1] to the
/// acceleration weight that pairs with it. Values outside the fitted range
/// are extrapolated with a warning on stderr.
double acceleration_from_inertia(double w);

/// Linear swap of the learning weights at constant aw. Returns (iw, sw)
/// with iw + sw == aw exactly.
std::pair<double, double> learning_weight_swap(int t, int t_max, double aw,
                                               double iw_start, double iw_end);

/// Constriction factor for learning weights iw, sw and 0 < kappa <= 1.
double constriction_factor(double iw, double sw, double kappa);

struct VmaxPolicy {
    enum class Kind { None, Constant, LinearDecreasing, HalfRange };
    Kind kind = Kind::None;
    double start = 0.0;
    double end = 0.0;

    static VmaxPolicy none();
    static VmaxPolicy constant(double v);
    static VmaxPolicy linear(double start, double end);
    /// Half the search-box width, resolved against the box inside vmax_at.
    static VmaxPolicy half_range();
};

std::string_view vmax_kind_name(VmaxPolicy::Kind k);
std::optional<VmaxPolicy::Kind> vmax_kind_from_name(std::string_view name);

/// Velocity cap at step t, or nullopt when no clamping applies.
std::optional<double> vmax_at(const VmaxPolicy& policy, int t, int t_max,
                              double lower, double upper);

struct ConstrictionSpec {
    double kappa = 1.0;
};

/// One optimizer configuration. When constriction is present the inertia
/// schedule is ignored: the constricted update has no separate w term.
struct ParameterSet {
    ScheduleSpec inertia = ScheduleSpec::constant(1.0);
    ScheduleSpec individuality = ScheduleSpec::constant(2.0);
    ScheduleSpec sociality = ScheduleSpec::constant(2.0);
    std::optional<ConstrictionSpec> constriction;
    VmaxPolicy vmax = VmaxPolicy::none();
};

/// Per-step weights after schedule resolution. chi is set iff the parameter
/// set uses constriction.
struct ResolvedWeights {
    double w = 1.0;
    double iw = 2.0;
    double sw = 2.0;
    std::optional<double> chi;
};

ResolvedWeights resolve_weights(const ParameterSet& params, int t, int t_max);

/// Inertia-form equivalent of a constricted setting: w = chi, learning
/// weights scaled by chi. Exposed as a helper, never applied implicitly.
struct InertiaEquivalent {
    double w;
    double iw;
    double sw;
};

InertiaEquivalent inertia_equivalent(double chi, double iw, double sw);

} // namespace psolab

#endif
