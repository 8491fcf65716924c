#include "betajac/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "betajac/eigencore.hpp"
#include "betajac/parallel.hpp"

namespace betajac {

void validate(const JacobiParams& p) {
    if (p.n == 0) throw ParamError("jacobi: n must be positive");
    if (!(p.beta > 0.0)) throw ParamError("jacobi: beta must be positive");
    const double nn = static_cast<double>(p.n);
    if (!(p.n1 > nn - 1.0) || !(p.n2 > nn - 1.0)) {
        throw ParamError("jacobi: need n1 > n - 1 and n2 > n - 1 for positive Beta shapes");
    }
}

JacobiAngles sample_angles(const JacobiParams& p, RngStream& stream) {
    validate(p);
    const std::size_t n = p.n;
    const double nn = static_cast<double>(n);
    const double half_beta = 0.5 * p.beta;

    JacobiAngles a;
    a.C.resize(n);
    a.S.resize(n);
    a.Ct.resize(n - 1);
    a.St.resize(n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const double c2 = sample_beta(half_beta * (p.n1 - nn + static_cast<double>(k)),
                                      half_beta * (p.n2 - nn + static_cast<double>(k)), stream);
        a.C[k - 1] = std::sqrt(c2);
        a.S[k - 1] = std::sqrt(1.0 - c2);
    }
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        const double c2 =
            sample_beta(half_beta * static_cast<double>(k),
                        half_beta * (p.n1 + p.n2 - 2.0 * nn + static_cast<double>(k) + 1.0), stream);
        a.Ct[k - 1] = std::sqrt(c2);
        a.St[k - 1] = std::sqrt(1.0 - c2);
    }
    return a;
}

namespace {

void validate(const JacobiAngles& a) {
    const std::size_t n = a.n();
    if (n == 0 || a.S.size() != n || a.Ct.size() + 1 != n || a.St.size() + 1 != n) {
        throw ParamError("jacobi: inconsistent angle arrays");
    }
}

}  // namespace

Bidiagonal build_M(const JacobiAngles& a) {
    validate(a);
    const std::size_t n = a.n();
    Bidiagonal m;
    m.orientation = Bidiagonal::Orientation::lower;
    m.diag.resize(n);
    m.offdiag.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        m.diag[k] = a.C[k] * a.St[k];
        m.offdiag[k] = a.S[k + 1] * a.Ct[k];
    }
    m.diag[n - 1] = a.C[n - 1];  // St_n = 1
    return m;
}

Bidiagonal build_W(const JacobiAngles& a) {
    Bidiagonal w = build_M(a);
    for (double& v : w.offdiag) v = -v;
    return w;
}

Bidiagonal build_Z(const JacobiAngles& a) {
    validate(a);
    const std::size_t n = a.n();
    Bidiagonal z;
    z.orientation = Bidiagonal::Orientation::upper;
    z.diag.resize(n);
    z.offdiag.resize(n - 1);
    // Row i of Z carries the entries of row n+1-i of M.
    z.diag[0] = a.C[n - 1];
    for (std::size_t i = 2; i <= n; ++i) {
        z.diag[i - 1] = a.C[n - i] * a.St[n - i];
    }
    for (std::size_t i = 1; i <= n - 1; ++i) {
        z.offdiag[i - 1] = a.S[n - i] * a.Ct[n - i - 1];
    }
    return z;
}

ScalingConstants scaling_constants(const JacobiParams& p) {
    validate(p);
    const double total = p.n1 + p.n2;
    ScalingConstants sc;
    sc.c = std::sqrt(p.n1 / total);
    sc.s = std::sqrt(p.n2 / total);
    sc.ct = std::sqrt(static_cast<double>(p.n) / total);
    sc.st = std::sqrt((total - static_cast<double>(p.n)) / total);
    const double plus = sc.c * sc.st + sc.s * sc.ct;
    const double minus = sc.c * sc.st - sc.s * sc.ct;
    sc.lambda_plus = plus * plus;
    sc.lambda_minus = minus * minus;

    const double csctst = sc.c * sc.s * sc.ct * sc.st;
    sc.denom = sc.ct * sc.st * (sc.c * sc.c - sc.s * sc.s) +
               sc.c * sc.s * (sc.ct * sc.ct - sc.st * sc.st);
    if (std::abs(sc.denom) > 1e-12) {
        // The 2/3 power is taken on the magnitude; the denominator's sign
        // carries no information about the upper edge scale.
        const double x = csctst * std::sqrt(total) / sc.denom;
        sc.m_n = std::cbrt(x * x);
        sc.alpha_n = sc.m_n * sc.m_n / csctst;
        sc.soft_edge_defined = true;
    } else {
        sc.m_n = std::numeric_limits<double>::quiet_NaN();
        sc.alpha_n = std::numeric_limits<double>::quiet_NaN();
        sc.soft_edge_defined = false;
    }
    return sc;
}

void require_soft_edge(const ScalingConstants& sc) {
    if (!sc.soft_edge_defined) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", sc.denom);
        throw DegenerateScalingError(
            sc.denom, std::string("soft-edge scaling undefined: m_n denominator = ") + buf);
    }
}

double hard_edge_scale(const JacobiParams& p) {
    validate(p);
    return static_cast<double>(p.n) * p.n2;
}

// ---------------------------------------------------------------------------
// Limiting spectral density
// ---------------------------------------------------------------------------

LimitingDensity::LimitingDensity(double gamma1, double gamma2)
    : gamma1_(gamma1), gamma2_(gamma2) {
    if (!(gamma1 >= 1.0) || !(gamma2 >= 1.0)) {
        throw ParamError("density: need gamma1 >= 1 and gamma2 >= 1");
    }
    const double gsum = gamma1 + gamma2;
    const double base = std::sqrt(gamma1 * (gsum - 1.0)) / gsum;
    const double off = std::sqrt(gamma2) / gsum;
    lambda_plus_ = (base + off) * (base + off);
    lambda_minus_ = (base - off) * (base - off);
    raw_mass_ = arc_integral(std::asin(1.0));
}

double LimitingDensity::raw_pdf(double x) const {
    if (x <= lambda_minus_ || x >= lambda_plus_) return 0.0;
    const double gsum = gamma1_ + gamma2_;
    return (2.0 * M_PI / gsum) * std::sqrt((lambda_plus_ - x) * (x - lambda_minus_)) /
           (x * (1.0 - x));
}

// Integral of the raw density over {x = L- + (L+ - L-) sin^2(theta),
// theta in [0, theta_hi]}. The square roots cancel analytically under the
// substitution, leaving (4 pi / gsum) * width^2 * s^2 c^2 / (x (1-x)); the
// guarded factors keep the integrand finite when an edge sits at 0 or 1
// (the arcsine case), so composite Simpson converges fast.
double LimitingDensity::arc_integral(double theta_hi) const {
    if (theta_hi <= 0.0) return 0.0;
    const double width = lambda_plus_ - lambda_minus_;
    const double scale = 4.0 * M_PI / (gamma1_ + gamma2_) * width * width;
    const bool lower_at_zero = lambda_minus_ < 1e-14;
    const bool upper_at_one = 1.0 - lambda_plus_ < 1e-14;
    auto f = [&](double theta) {
        const double s2 = std::pow(std::sin(theta), 2);
        const double c2 = 1.0 - s2;
        const double x = lambda_minus_ + width * s2;
        const double left = lower_at_zero ? 1.0 / width : s2 / x;
        const double right = upper_at_one ? 1.0 / width : c2 / (1.0 - x);
        return scale * left * right;
    };
    const std::size_t panels = 1 << 12;
    const double h = theta_hi / static_cast<double>(panels);
    double sum = f(0.0) + f(theta_hi);
    for (std::size_t i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
    }
    return sum * h / 3.0;
}

double LimitingDensity::pdf(double x) const { return raw_pdf(x) / raw_mass_; }

double LimitingDensity::cdf(double x) const {
    if (x <= lambda_minus_) return 0.0;
    if (x >= lambda_plus_) return 1.0;
    const double u = (x - lambda_minus_) / (lambda_plus_ - lambda_minus_);
    return arc_integral(std::asin(std::sqrt(u))) / raw_mass_;
}

double density_rho(double x, double gamma1, double gamma2) {
    return LimitingDensity(gamma1, gamma2).pdf(x);
}

// ---------------------------------------------------------------------------
// Edge samples
// ---------------------------------------------------------------------------

SymTridiagonal build_Hn(const JacobiAngles& a, const ScalingConstants& sc) {
    require_soft_edge(sc);
    const SymTridiagonal g = gram(build_Z(a));
    SymTridiagonal h;
    h.diag.resize(g.dim());
    h.offdiag.resize(g.dim() - 1);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        h.diag[i] = sc.alpha_n * (sc.lambda_plus - g.diag[i]);
    }
    for (std::size_t i = 0; i + 1 < g.dim(); ++i) {
        h.offdiag[i] = -sc.alpha_n * g.offdiag[i];
    }
    return h;
}

SymTridiagonal build_Hn(const JacobiParams& p, RngStream& stream) {
    const ScalingConstants sc = scaling_constants(p);
    require_soft_edge(sc);
    const JacobiAngles a = sample_angles(p, stream);
    return build_Hn(a, sc);
}

std::vector<double> soft_edge_from_angles(const JacobiAngles& a, const ScalingConstants& sc,
                                          std::size_t k, double tolerance) {
    require_soft_edge(sc);
    if (k == 0 || k > a.n()) throw ParamError("soft_edge: need 1 <= k <= n");
    const SymTridiagonal t = gram(build_M(a));
    SpectrumQuery q;
    q.count = k;
    q.side = SpectrumQuery::Side::largest;
    q.tolerance = tolerance;
    std::vector<double> top = extreme_eigenvalues(t, q);  // ascending
    std::vector<double> out(k);
    for (std::size_t l = 0; l < k; ++l) {
        // lambda_1 is the largest eigenvalue, i.e. the last entry of top.
        out[l] = sc.alpha_n * (sc.lambda_plus - top[k - 1 - l]);
    }
    return out;
}

std::vector<double> soft_edge_sample(const JacobiParams& p, std::size_t k, RngStream& stream) {
    validate(p);
    if (!(p.n2 > static_cast<double>(p.n))) {
        throw ParamError("soft_edge: upper soft edge requires n2/n > 1");
    }
    const ScalingConstants sc = scaling_constants(p);
    require_soft_edge(sc);
    const JacobiAngles a = sample_angles(p, stream);
    return soft_edge_from_angles(a, sc, k);
}

std::vector<double> hard_edge_from_angles(const JacobiAngles& a, double m_n, std::size_t k,
                                          double tolerance) {
    if (k == 0 || k > a.n()) throw ParamError("hard_edge: need 1 <= k <= n");
    if (!(m_n > 0.0)) throw ParamError("hard_edge: scale must be positive");
    SymTridiagonal t = gram(build_W(a));
    // Scale first so the bisection tolerance applies to O(1) eigenvalues.
    for (double& v : t.diag) v *= m_n;
    for (double& v : t.offdiag) v *= m_n;
    SpectrumQuery q;
    q.count = k;
    q.side = SpectrumQuery::Side::smallest;
    q.tolerance = tolerance;
    return extreme_eigenvalues(t, q);
}

std::vector<double> hard_edge_sample(const JacobiParams& p, std::size_t k, RngStream& stream) {
    validate(p);
    if (!(p.n2 >= static_cast<double>(p.n))) {
        throw ParamError("hard_edge: requires n2 >= n");
    }
    const JacobiAngles a = sample_angles(p, stream);
    return hard_edge_from_angles(a, hard_edge_scale(p), k);
}

// ---------------------------------------------------------------------------
// Drift / variance diagnostic
// ---------------------------------------------------------------------------

double DriftVarianceReport::mean_var_scaled() const {
    if (rows.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& r : rows) sum += r.var_scaled;
    return sum / static_cast<double>(rows.size());
}

double DriftVarianceReport::max_increment_rel_err(double x_min, double x_max) const {
    double worst = 0.0;
    for (const auto& r : rows) {
        if (r.x < x_min || r.x > x_max || r.inc_pred == 0.0) continue;
        worst = std::max(worst, std::abs(r.inc_mean - r.inc_pred) / r.inc_pred);
    }
    return worst;
}

double DriftVarianceReport::max_binned_increment_rel_err(double x_min, double x_max,
                                                         std::size_t bins) const {
    if (bins == 0 || !(x_max > x_min)) throw ParamError("drift report: bad bin request");
    const double width = (x_max - x_min) / static_cast<double>(bins);
    double worst = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        const double lo = x_min + width * static_cast<double>(b);
        const double hi = lo + width;
        double sum_mean = 0.0;
        double sum_pred = 0.0;
        std::size_t count = 0;
        for (const auto& r : rows) {
            if (r.x < lo || r.x >= hi) continue;
            sum_mean += r.inc_mean;
            sum_pred += r.inc_pred;
            ++count;
        }
        if (count == 0 || sum_pred == 0.0) continue;
        worst = std::max(worst, std::abs(sum_mean - sum_pred) / sum_pred);
    }
    return worst;
}

double DriftVarianceReport::max_drift_rel_err(double x_min) const {
    double worst = 0.0;
    for (const auto& r : rows) {
        if (r.x < x_min || r.drift_pred == 0.0) continue;
        worst = std::max(worst, std::abs(r.drift_mean - r.drift_pred) / r.drift_pred);
    }
    return worst;
}

DriftVarianceReport drift_variance_diagnostic(const JacobiParams& p, double x_max,
                                              std::size_t trials, std::uint64_t seed,
                                              int threads) {
    validate(p);
    if (!(x_max > 0.0) || trials == 0) {
        throw ParamError("drift diagnostic: need x_max > 0 and trials >= 1");
    }
    const ScalingConstants sc = scaling_constants(p);
    require_soft_edge(sc);
    const double m = sc.m_n;
    const double csctst = sc.c * sc.s * sc.ct * sc.st;
    const std::size_t n = p.n;
    if (n < 2) throw ParamError("drift diagnostic: need n >= 2");
    std::size_t k_max = static_cast<std::size_t>(std::floor(x_max * m));
    k_max = std::min(k_max, n - 1);
    if (k_max == 0) throw ParamError("drift diagnostic: x_max * m_n below one grid step");

    // Per-trial increment sums; reduced in trial order afterwards so the
    // report does not depend on the thread count.
    std::vector<std::vector<double>> per_trial(trials);
    run_trials(trials, threads, [&](std::size_t t) {
        RngStream stream(seed, t);
        const JacobiAngles a = sample_angles(p, stream);
        std::vector<double> dy(k_max);
        for (std::size_t k = 1; k <= k_max; ++k) {
            const double C = a.C[n - k - 1];    // C_{n-k}
            const double S = a.S[n - k - 1];    // S_{n-k}
            const double Ct = a.Ct[n - k - 1];  // Ct_{n-k}
            const double St = a.St[n - k - 1];  // St_{n-k}
            const double dy1 =
                (m / csctst) * (sc.c * sc.c * sc.st * sc.st + sc.s * sc.s * sc.ct * sc.ct -
                                S * S * Ct * Ct - C * C * St * St);
            const double dy2 = (2.0 * m / csctst) * (csctst - C * S * Ct * St);
            dy[k - 1] = dy1 + dy2;
        }
        per_trial[t] = std::move(dy);
    });

    std::vector<double> sum1(k_max, 0.0), sum2(k_max, 0.0), sum4(k_max, 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t k = 0; k < k_max; ++k) {
            const double d = per_trial[t][k];
            sum1[k] += d;
            sum2[k] += d * d;
        }
    }
    const double tn = static_cast<double>(trials);
    std::vector<double> mean(k_max);
    for (std::size_t k = 0; k < k_max; ++k) mean[k] = sum1[k] / tn;
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t k = 0; k < k_max; ++k) {
            const double c = per_trial[t][k] - mean[k];
            sum4[k] += c * c * c * c;
        }
    }

    DriftVarianceReport report;
    report.m_n = m;
    report.beta = p.beta;
    report.var_pred = 4.0 / p.beta;
    report.rows.resize(k_max);
    double cum = 0.0;
    for (std::size_t k = 0; k < k_max; ++k) {
        cum += mean[k];
        auto& row = report.rows[k];
        row.x = static_cast<double>(k + 1) / m;
        row.inc_mean = m * mean[k];
        row.inc_pred = row.x;
        row.drift_mean = cum;
        row.drift_pred = 0.5 * row.x * row.x;
        row.var_scaled = m * (sum2[k] / tn - mean[k] * mean[k]);
        row.fourth_scaled = m * sum4[k] / tn;
    }
    return report;
}

}  // namespace betajac
