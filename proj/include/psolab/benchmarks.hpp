#ifndef PSOLAB_BENCHMARKS_HPP
#define PSOLAB_BENCHMARKS_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace psolab {

enum class Function { Sphere, Rosenbrock, Rastrigin, Griewank, SchafferF6 };

inline constexpr std::array<Function, 5> kAllFunctions = {
    Function::Sphere, Function::Rosenbrock, Function::Rastrigin,
    Function::Griewank, Function::SchafferF6};

/// Benchmark problem: function, dimension, uniform search box and the
/// absolute conflict threshold below which a run counts as successful.
struct ObjectiveSpec {
    Function function = Function::Sphere;
    int dimension = 30;
    double lower_bound = -100.0;
    double upper_bound = 100.0;
    double acceptable_error = 0.01;
    double known_optimum_value = 0.0;
};

/// Conflict value at `point`. Points outside the search box are evaluated
/// as-is; only velocities are ever clamped.
double evaluate(const ObjectiveSpec& spec, std::span<const double> point);

/// The stock 30-dimensional configuration for each benchmark.
ObjectiveSpec default_spec(Function f);

std::string_view function_name(Function f);
std::optional<Function> function_from_name(std::string_view name);

} // namespace psolab

#endif
