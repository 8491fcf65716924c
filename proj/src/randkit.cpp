#include "betajac/randkit.hpp"

#include <cmath>
#include <limits>

namespace betajac {

namespace {

// SplitMix64 finalizer, used to spread (seed, stream_id) over the engine seed.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    const std::uint64_t key = splitmix64(splitmix64(seed) ^ splitmix64(stream_id * 0x632be59bd9b4e019ULL + 1));
    engine_.seed(key);
}

double RngStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return u;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    for (;;) {
        const double u = 2.0 * uniform() - 1.0;
        const double v = 2.0 * uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double f = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * f;
            has_spare_ = true;
            return u * f;
        }
    }
}

double sample_gamma(double shape, RngStream& stream) {
    if (!(shape > 0.0)) {
        throw ParamError("sample_gamma: shape must be positive");
    }
    if (shape < 1.0) {
        // Boost: if G ~ Gamma(shape+1) and U uniform, G * U^(1/shape) ~ Gamma(shape).
        const double g = sample_gamma(shape + 1.0, stream);
        const double u = stream.uniform_pos();
        return g * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang (2000) with the quick-accept squeeze.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = stream.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.uniform_pos();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double sample_beta(double p, double q, RngStream& stream) {
    if (!(p > 0.0) || !(q > 0.0)) {
        throw ParamError("sample_beta: parameters must be positive");
    }
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const double x = sample_gamma(p, stream);
        const double y = sample_gamma(q, stream);
        const double s = x + y;
        if (s <= 0.0) continue;
        const double r = x / s;
        if (r > 0.0 && r < 1.0) return r;
    }
    throw NumericError("sample_beta: could not produce a draw strictly inside (0,1)");
}

double beta_joint_moment(double p, double q, int i, int j) {
    if (!(p > 0.0) || !(q > 0.0)) {
        throw ParamError("beta_joint_moment: parameters must be positive");
    }
    if (i < 0 || j < 0) {
        throw ParamError("beta_joint_moment: moment orders must be nonnegative");
    }
    double num = 1.0;
    for (int l = 0; l < i; ++l) num *= p + static_cast<double>(l);
    for (int l = 0; l < j; ++l) num *= q + static_cast<double>(l);
    double den = 1.0;
    for (int l = 0; l < i + j; ++l) den *= p + q + static_cast<double>(l);
    return num / den;
}

namespace {

std::size_t grid_steps(double length, double step) {
    if (!(length > 0.0) || !(step > 0.0) || step > length * (1.0 + 1e-12)) {
        throw ParamError("brownian path: need 0 < step <= length");
    }
    return static_cast<std::size_t>(std::ceil(length / step - 1e-9));
}

}  // namespace

BrownianPath sample_brownian(double length, double step, RngStream& stream) {
    const std::size_t m = grid_steps(length, step);
    BrownianPath path;
    path.step = step;
    path.values.resize(m + 1);
    path.values[0] = 0.0;
    const double sd = std::sqrt(step);
    for (std::size_t i = 1; i <= m; ++i) {
        path.values[i] = path.values[i - 1] + sd * stream.normal();
    }
    return path;
}

BrownianPath zero_brownian(double length, double step) {
    const std::size_t m = grid_steps(length, step);
    BrownianPath path;
    path.step = step;
    path.values.assign(m + 1, 0.0);
    return path;
}

BrownianPath refine_brownian(const BrownianPath& path, RngStream& stream) {
    if (path.values.size() < 2 || !(path.step > 0.0)) {
        throw ParamError("refine_brownian: path must hold at least one increment");
    }
    BrownianPath fine;
    fine.step = path.step / 2.0;
    fine.values.resize(2 * path.values.size() - 1);
    const double mid_sd = std::sqrt(path.step / 4.0);
    for (std::size_t i = 0; i + 1 < path.values.size(); ++i) {
        fine.values[2 * i] = path.values[i];
        // Bridge midpoint: mean of the endpoints plus Normal(0, h/4).
        fine.values[2 * i + 1] =
            0.5 * (path.values[i] + path.values[i + 1]) + mid_sd * stream.normal();
    }
    fine.values.back() = path.values.back();
    return fine;
}

BrownianPath extend_brownian(const BrownianPath& path, double new_length, RngStream& stream) {
    if (path.values.empty() || !(path.step > 0.0)) {
        throw ParamError("extend_brownian: empty path");
    }
    const std::size_t m = grid_steps(new_length, path.step);
    BrownianPath out = path;
    const double sd = std::sqrt(path.step);
    while (out.values.size() < m + 1) {
        out.values.push_back(out.values.back() + sd * stream.normal());
    }
    return out;
}

}  // namespace betajac
