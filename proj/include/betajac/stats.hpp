#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "betajac/errors.hpp"

namespace betajac {

/// Sorted Monte Carlo sample with ECDF and quantile queries.
class EmpiricalDistribution {
 public:
    explicit EmpiricalDistribution(std::vector<double> samples);

    const std::vector<double>& samples() const { return samples_; }
    std::size_t count() const { return samples_.size(); }

    /// Fraction of samples <= x.
    double ecdf(double x) const;

 private:
    std::vector<double> samples_;
};

/// Sup-norm distance between the two ECDFs (merge scan, exact with ties).
double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// Order-statistic quantiles with linear interpolation between neighbors.
std::vector<double> quantiles(const EmpiricalDistribution& d, std::span<const double> probs);

/// Equal-width histogram normalized to the full sample count; mass falling
/// outside [lo, hi] is tracked separately.
struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> mass;
    double out_mass = 0.0;

    static Histogram from_samples(std::span<const double> samples, double lo, double hi,
                                  std::size_t bins);
};

/// L1 distance between a histogram and a density with the given support:
/// sum over bins of |mass - integral of pdf| plus the sample mass outside
/// the bins plus the pdf mass outside the binned range. Disjoint supports
/// give 2 (twice the total variation). Bin integrals use adaptive Simpson.
double l1_density_distance(const Histogram& hist, const std::function<double(double)>& pdf,
                           double support_lo, double support_hi);

}  // namespace betajac
