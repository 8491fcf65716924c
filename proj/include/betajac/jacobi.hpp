#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "betajac/matcore.hpp"
#include "betajac/randkit.hpp"

namespace betajac {

/// Parameters (n, n1, n2, beta) of the beta-Jacobi ensemble. n1 and n2 may
/// be non-integer; all that matters is that every Beta shape in the
/// bidiagonal model stays positive, i.e. n1 > n-1 and n2 > n-1.
struct JacobiParams {
    std::size_t n = 0;
    double n1 = 0.0;
    double n2 = 0.0;
    double beta = 0.0;
};

void validate(const JacobiParams& p);

/// Angle variables of the bidiagonal model:
///   C_k = sqrt(Beta(beta/2 (n1-n+k), beta/2 (n2-n+k)))        k = 1..n
///   Ct_k = sqrt(Beta(beta/2 k, beta/2 (n1+n2-2n+k+1)))        k = 1..n-1
/// with S, St the complementary sines (S = sqrt(1-C^2)) and the boundary
/// convention St_n = 1.
struct JacobiAngles {
    std::vector<double> C, S;    // length n
    std::vector<double> Ct, St;  // length n-1

    std::size_t n() const { return C.size(); }
};

JacobiAngles sample_angles(const JacobiParams& p, RngStream& stream);

/// Lower bidiagonal M with diagonal C_k St_k (last entry C_n) and
/// subdiagonal S_{k+1} Ct_k. The eigenvalues of M M^T follow the ensemble.
Bidiagonal build_M(const JacobiAngles& a);

/// Hard-edge variant W: same entries as M with negated subdiagonal, so
/// spec(W W^T) = spec(M M^T) while the inverse has all-positive entries.
Bidiagonal build_W(const JacobiAngles& a);

/// Index-reversed upper-bidiagonal form Z (same singular values as M);
/// the soft-edge matrix H_n is an affine image of Z Z^T.
Bidiagonal build_Z(const JacobiAngles& a);

/// Soft-edge scaling data. The edge locations are defined for every valid
/// parameter set; m_n and alpha_n exist only when the denominator
/// ct*st*(c^2-s^2) + c*s*(ct^2-st^2) does not vanish (soft_edge_defined).
struct ScalingConstants {
    double c = 0.0, s = 0.0, ct = 0.0, st = 0.0;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double denom = 0.0;
    double m_n = 0.0;      // NaN when degenerate
    double alpha_n = 0.0;  // NaN when degenerate
    bool soft_edge_defined = false;
};

ScalingConstants scaling_constants(const JacobiParams& p);

/// Throws DegenerateScalingError (carrying the denominator) when the
/// soft-edge scaling is undefined.
void require_soft_edge(const ScalingConstants& sc);

/// Hard-edge eigenvalue scale m_n = n * n2.
double hard_edge_scale(const JacobiParams& p);

/// Limiting spectral density on [lambda_minus, lambda_plus], renormalized
/// numerically to unit mass. raw_mass() records the integral of the
/// unnormalized closed form, i.e. the raw-vs-normalized ratio.
class LimitingDensity {
 public:
    LimitingDensity(double gamma1, double gamma2);

    double pdf(double x) const;
    double cdf(double x) const;
    double lambda_minus() const { return lambda_minus_; }
    double lambda_plus() const { return lambda_plus_; }
    double raw_mass() const { return raw_mass_; }

 private:
    double raw_pdf(double x) const;
    double arc_integral(double theta_hi) const;

    double gamma1_, gamma2_;
    double lambda_minus_, lambda_plus_;
    double raw_mass_;
};

/// Normalized density value at x (0 outside the support).
double density_rho(double x, double gamma1, double gamma2);

/// Soft-edge matrix H_n = alpha_n ((c st + s ct)^2 I - Z Z^T), built as the
/// exact affine image of a sampled Z Z^T so that
/// spec(H_n) = alpha_n (Lambda_plus - spec(Z Z^T)) holds per draw.
SymTridiagonal build_Hn(const JacobiAngles& a, const ScalingConstants& sc);
SymTridiagonal build_Hn(const JacobiParams& p, RngStream& stream);

/// One soft-edge draw: (alpha_n (Lambda_plus - lambda_l))_{l=1..k} with
/// lambda_l the l-th largest eigenvalue of M M^T. Requires n2/n > 1.
std::vector<double> soft_edge_sample(const JacobiParams& p, std::size_t k, RngStream& stream);
std::vector<double> soft_edge_from_angles(const JacobiAngles& a, const ScalingConstants& sc,
                                          std::size_t k, double tolerance = 1e-12);

/// One hard-edge draw: (m_n lambda_l)_{l=0..k-1} with lambda the smallest
/// eigenvalues of W W^T and m_n = n * n2. Requires n2 >= n.
std::vector<double> hard_edge_sample(const JacobiParams& p, std::size_t k, RngStream& stream);
std::vector<double> hard_edge_from_angles(const JacobiAngles& a, double m_n, std::size_t k,
                                          double tolerance = 1e-12);

/// Monte Carlo check of the soft-edge increment asymptotics, using the
/// centered increments of y_{n,1} + y_{n,2} (all angle indices at n-k).
/// Per grid index k <= x_max * m_n the report tabulates the increment mean
/// m_n E[dy_k] against the x^2/2-drift increment k/m_n, the cumulative
/// drift against x^2/2, and the scaled variance m_n Var(dy_k) against
/// 4/beta, plus the scaled fourth moment.
struct DriftVarianceRow {
    double x = 0.0;            // k / m_n
    double inc_mean = 0.0;     // m_n * E[dy_k]
    double inc_pred = 0.0;     // k / m_n
    double drift_mean = 0.0;   // empirical E[y_{n,k}]
    double drift_pred = 0.0;   // x^2 / 2
    double var_scaled = 0.0;   // m_n * Var(dy_k)
    double fourth_scaled = 0.0;
};

struct DriftVarianceReport {
    double m_n = 0.0;
    double beta = 0.0;
    double var_pred = 0.0;  // 4 / beta
    std::vector<DriftVarianceRow> rows;

    double mean_var_scaled() const;
    /// Largest relative deviation of the increment means from k/m_n over
    /// rows with x in [x_min, x_max]. The relative comparison is only
    /// meaningful away from x = 0, where the prediction vanishes.
    double max_increment_rel_err(double x_min, double x_max) const;
    /// Same but with rows averaged over equal x-bins first, which divides
    /// the Monte Carlo noise of the per-row means.
    double max_binned_increment_rel_err(double x_min, double x_max, std::size_t bins) const;
    /// Same for the cumulative drift against x^2/2.
    double max_drift_rel_err(double x_min) const;
};

DriftVarianceReport drift_variance_diagnostic(const JacobiParams& p, double x_max,
                                              std::size_t trials, std::uint64_t seed,
                                              int threads = 1);

}  // namespace betajac
