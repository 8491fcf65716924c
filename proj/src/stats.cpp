#include "betajac/stats.hpp"

#include <algorithm>
#include <cmath>

namespace betajac {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
    if (samples_.empty()) throw ParamError("empirical distribution: no samples");
    std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDistribution::ecdf(double x) const {
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    const auto& xs = a.samples();
    const auto& ys = b.samples();
    const double na = static_cast<double>(xs.size());
    const double nb = static_cast<double>(ys.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < xs.size() || j < ys.size()) {
        double x;
        if (i < xs.size() && j < ys.size()) {
            x = std::min(xs[i], ys[j]);
        } else if (i < xs.size()) {
            x = xs[i];
        } else {
            x = ys[j];
        }
        while (i < xs.size() && xs[i] <= x) ++i;
        while (j < ys.size() && ys[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

std::vector<double> quantiles(const EmpiricalDistribution& d, std::span<const double> probs) {
    const auto& s = d.samples();
    std::vector<double> out;
    out.reserve(probs.size());
    for (double p : probs) {
        if (!(p >= 0.0) || !(p <= 1.0)) {
            throw ParamError("quantiles: probabilities must lie in [0, 1]");
        }
        const double h = p * static_cast<double>(s.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, s.size() - 1);
        const double frac = h - static_cast<double>(lo);
        out.push_back(s[lo] + frac * (s[hi] - s[lo]));
    }
    return out;
}

Histogram Histogram::from_samples(std::span<const double> samples, double lo, double hi,
                                  std::size_t bins) {
    if (!(hi > lo) || bins == 0) throw ParamError("histogram: need hi > lo and bins >= 1");
    if (samples.empty()) throw ParamError("histogram: no samples");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.mass.assign(bins, 0.0);
    const double unit = 1.0 / static_cast<double>(samples.size());
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double x : samples) {
        if (x < lo || x > hi) {
            h.out_mass += unit;
            continue;
        }
        std::size_t b = static_cast<std::size_t>((x - lo) / width);
        if (b >= bins) b = bins - 1;
        h.mass[b] += unit;
    }
    return h;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double l1_density_distance(const Histogram& hist, const std::function<double(double)>& pdf,
                           double support_lo, double support_hi) {
    if (!(support_hi > support_lo)) throw ParamError("l1 distance: empty support");
    const std::size_t bins = hist.mass.size();
    const double width = (hist.hi - hist.lo) / static_cast<double>(bins);
    double total = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        const double a = hist.lo + width * static_cast<double>(b);
        const double c = a + width;
        const double lo = std::max(a, support_lo);
        const double hi = std::min(c, support_hi);
        const double rho_mass = (hi > lo) ? integrate(pdf, lo, hi, 1e-10) : 0.0;
        total += std::abs(hist.mass[b] - rho_mass);
    }
    // Density mass not covered by the binned range.
    if (support_lo < hist.lo) {
        total += integrate(pdf, support_lo, std::min(hist.lo, support_hi), 1e-10);
    }
    if (support_hi > hist.hi) {
        total += integrate(pdf, std::max(hist.hi, support_lo), support_hi, 1e-10);
    }
    return total + hist.out_mass;
}

}  // namespace betajac
