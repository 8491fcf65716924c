#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "betajac/errors.hpp"

namespace betajac {

/// Seeded random stream. Two streams constructed with equal (seed, stream_id)
/// replay bit-identical sequences; streams with distinct stream_id derived
/// from one seed are independent for Monte Carlo purposes (the id is mixed
/// into the engine state counter-style, so trial t of an experiment can use
/// stream_id = t regardless of how trials are scheduled across threads).
///
/// A stream is value-like and movable between threads; a single stream must
/// not be shared concurrently.
class RngStream {
 public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Uniform draw on [0,1) with 53-bit resolution.
    double uniform();

    /// Uniform draw on (0,1), never exactly zero.
    double uniform_pos();

    /// Standard normal draw (Marsaglia polar method, one spare cached).
    double normal();

 private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// One draw from Gamma(shape, scale 1). Marsaglia-Tsang rejection with the
/// squeeze step for shape >= 1; shapes below 1 are boosted through
/// Gamma(shape+1) * U^(1/shape). Valid for every shape > 0.
double sample_gamma(double shape, RngStream& stream);

/// One draw from Beta(p, q) via X/(X+Y) with X ~ Gamma(p), Y ~ Gamma(q).
/// The result is strictly inside (0,1): draws that round to 0 or 1 are
/// resampled, not clipped.
double sample_beta(double p, double q, RngStream& stream);

/// Exact joint moment E[Y^i (1-Y)^j] for Y ~ Beta(p, q), computed from the
/// rising-product formula. Used as an oracle for the sampler.
double beta_joint_moment(double p, double q, int i, int j);

/// Discretized Brownian motion on the uniform grid {0, h, 2h, ...}.
/// values[0] == 0 and the increments are i.i.d. Normal(0, h).
struct BrownianPath {
    double step = 0.0;
    std::vector<double> values;

    double length() const {
        return values.empty() ? 0.0 : step * static_cast<double>(values.size() - 1);
    }
};

/// Path on {0, h, ..., ceil(length/h)*h}.
BrownianPath sample_brownian(double length, double step, RngStream& stream);

/// All-zero path on the same grid (noise switched off).
BrownianPath zero_brownian(double length, double step);

/// Halve the step of an existing path, filling midpoints by Brownian-bridge
/// interpolation (new increments drawn from the stream).
BrownianPath refine_brownian(const BrownianPath& path, RngStream& stream);

/// Extend a path to a longer horizon by appending fresh increments.
BrownianPath extend_brownian(const BrownianPath& path, double new_length, RngStream& stream);

}  // namespace betajac
