#ifndef PSOLAB_RNG_HPP
#define PSOLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace psolab {

/// Source of uniform draws in [0,1). The engine pulls every random weight
/// through this interface so tests can substitute recorded or constant draws.
struct UniformSource {
    virtual ~UniformSource() = default;
    virtual double next() = 0;
};

/// Deterministic seeded generator. Equal seeds give bit-identical streams.
class Prng final : public UniformSource {
public:
    explicit Prng(std::uint64_t seed) : gen_(seed) {}

    double next() override { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

    friend bool operator==(const Prng& a, const Prng& b) { return a.gen_ == b.gen_; }

private:
    std::mt19937_64 gen_;
};

/// Always returns the same value. Used to reproduce the average-behaviour
/// analyses where the random weights are replaced by their mean.
struct ConstantSource final : UniformSource {
    double value = 0.5;
    explicit ConstantSource(double v = 0.5) : value(v) {}
    double next() override { return value; }
};

/// Forwards to an inner source while appending every draw to a log.
class RecordingSource final : public UniformSource {
public:
    RecordingSource(UniformSource& inner, std::vector<double>& log)
        : inner_(inner), log_(log) {}

    double next() override {
        double u = inner_.next();
        log_.push_back(u);
        return u;
    }

private:
    UniformSource& inner_;
    std::vector<double>& log_;
};

} // namespace psolab

#endif
