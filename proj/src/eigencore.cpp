#include "betajac/eigencore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "betajac/errors.hpp"

namespace betajac {

namespace {

double inf_norm(const SymTridiagonal& t) {
    const std::size_t n = t.dim();
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(t.diag[i]);
        if (i > 0) row += std::abs(t.offdiag[i - 1]);
        if (i + 1 < n) row += std::abs(t.offdiag[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

}  // namespace

std::size_t sturm_count(const SymTridiagonal& t, double x) {
    validate(t);
    const std::size_t n = t.dim();
    const double norm = inf_norm(t);
    const double pivmin = std::max(1e-30 * std::max(norm, 1.0),
                                   std::numeric_limits<double>::min());
    std::size_t count = 0;
    double d = t.diag[0] - x;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = t.offdiag[i - 1];
        d = (t.diag[i] - x) - e * e / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> extreme_eigenvalues(const SymTridiagonal& t, const SpectrumQuery& q) {
    validate(t);
    const std::size_t n = t.dim();
    if (q.count == 0 || q.count > n) {
        throw ParamError("extreme_eigenvalues: count must be in [1, dim]");
    }
    if (!(q.tolerance > 0.0)) {
        throw ParamError("extreme_eigenvalues: tolerance must be positive");
    }

    // Gershgorin bracket for the whole spectrum.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(t.offdiag[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }

    std::vector<double> out(q.count);
    double a_floor = lo;
    for (std::size_t j = 0; j < q.count; ++j) {
        // 1-based index of the wanted eigenvalue, counted from the bottom.
        const std::size_t idx =
            (q.side == SpectrumQuery::Side::smallest) ? j + 1 : n - q.count + j + 1;
        double a = a_floor;
        double b = hi;
        // Invariant: sturm_count(a) < idx and sturm_count(b) >= idx at exit.
        for (int iter = 0; iter < 20000 && (b - a) > q.tolerance; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;  // bracket at floating-point resolution
            if (sturm_count(t, mid) >= idx) {
                b = mid;
            } else {
                a = mid;
            }
        }
        out[j] = 0.5 * (a + b);
        a_floor = a;  // later (larger) eigenvalues cannot lie below this
    }
    return out;
}

std::vector<double> full_spectrum(const SymTridiagonal& t, double tolerance) {
    SpectrumQuery q;
    q.count = t.dim();
    q.side = SpectrumQuery::Side::smallest;
    q.tolerance = tolerance;
    return extreme_eigenvalues(t, q);
}

namespace {

// Cyclic Jacobi on a symmetric matrix held in w; if vecs is non-null it
// accumulates the rotations so its columns end up as eigenvectors matching
// the (unsorted) diagonal of w.
void jacobi_rotate(DenseMatrix& w, DenseMatrix* vecs) {
    const std::size_t n = w.rows;
    double fro = 0.0;
    for (double v : w.data) fro += v * v;
    fro = std::sqrt(fro);
    // Tighter than the 1e-12 ||A|| contract; the final sweep converges
    // quadratically, and small eigenvalues of the hard-edge gram matrices
    // need the extra absolute accuracy.
    const double target = 1e-14 * std::max(fro, std::numeric_limits<double>::min());

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * w(p, q) * w(p, q);
        }
        if (std::sqrt(off) <= target) return;
        if (sweep + 1 == max_sweeps) {
            throw NumericError("dense_sym_eigen: Jacobi rotations did not converge");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                if (apq == 0.0) continue;
                const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double tt = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double wip = w(i, p);
                    const double wiq = w(i, q);
                    w(i, p) = c * wip - s * wiq;
                    w(i, q) = s * wip + c * wiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double wpi = w(p, i);
                    const double wqi = w(q, i);
                    w(p, i) = c * wpi - s * wqi;
                    w(q, i) = s * wpi + c * wqi;
                }
                if (vecs != nullptr) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const double vip = (*vecs)(i, p);
                        const double viq = (*vecs)(i, q);
                        (*vecs)(i, p) = c * vip - s * viq;
                        (*vecs)(i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }
}

DenseMatrix symmetrized_copy(const DenseMatrix& a) {
    if (a.rows != a.cols || a.rows == 0) {
        throw ParamError("dense_sym_eigen: matrix must be square and nonempty");
    }
    const std::size_t n = a.rows;
    double max_abs = 0.0;
    double max_asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::abs(a(i, j)));
            max_asym = std::max(max_asym, std::abs(a(i, j) - a(j, i)));
        }
    }
    if (max_asym > 1e-12 * std::max(max_abs, 1.0)) {
        throw ParamError("dense_sym_eigen: input is not symmetric");
    }
    DenseMatrix w = a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (w(i, j) + w(j, i));
            w(i, j) = v;
            w(j, i) = v;
        }
    }
    return w;
}

}  // namespace

std::vector<double> dense_sym_eigen(const DenseMatrix& a) {
    DenseMatrix w = symmetrized_copy(a);
    jacobi_rotate(w, nullptr);
    std::vector<double> eig(w.rows);
    for (std::size_t i = 0; i < w.rows; ++i) eig[i] = w(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> dense_singular_values(const DenseMatrix& a) {
    if (a.rows != a.cols || a.rows == 0) {
        throw ParamError("dense_singular_values: matrix must be square and nonempty");
    }
    const std::size_t n = a.rows;
    DenseMatrix w = a;
    const double tol = 1e-15;
    const double tiny = std::numeric_limits<double>::min();

    const int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    app += w(i, p) * w(i, p);
                    aqq += w(i, q) * w(i, q);
                    apq += w(i, p) * w(i, q);
                }
                if (app < tiny || aqq < tiny) continue;
                if (std::abs(apq) <= tol * std::sqrt(app) * std::sqrt(aqq)) continue;
                rotated = true;
                const double theta = (aqq - app) / (2.0 * apq);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double wip = w(i, p);
                    const double wiq = w(i, q);
                    w(i, p) = c * wip - s * wiq;
                    w(i, q) = s * wip + c * wiq;
                }
            }
        }
        if (!rotated) break;
        if (sweep + 1 == max_sweeps) {
            throw NumericError("dense_singular_values: one-sided Jacobi did not converge");
        }
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        // Scaled column norm, robust against under/overflow of the squares.
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(w(i, j)));
        if (scale == 0.0) {
            sigma[j] = 0.0;
            continue;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = w(i, j) / scale;
            sum += v * v;
        }
        sigma[j] = scale * std::sqrt(sum);
    }
    std::sort(sigma.begin(), sigma.end());
    return sigma;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void orthonormalize(std::vector<std::vector<double>>& basis) {
    // Two passes of modified Gram-Schmidt.
    const std::size_t dim = basis.empty() ? 0 : basis[0].size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t v = 0; v < basis.size(); ++v) {
            for (std::size_t u = 0; u < v; ++u) {
                double dot = 0.0;
                for (std::size_t i = 0; i < dim; ++i) dot += basis[u][i] * basis[v][i];
                for (std::size_t i = 0; i < dim; ++i) basis[v][i] -= dot * basis[u][i];
            }
            double nrm = 0.0;
            for (double x : basis[v]) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm < 1e-300) {
                for (std::size_t i = 0; i < dim; ++i) {
                    basis[v][i] =
                        static_cast<double>(mix64(0xabcdef12u + 977u * v + i)) * 0x1.0p-64 - 0.5;
                }
                nrm = 0.0;
                for (double x : basis[v]) nrm += x * x;
                nrm = std::sqrt(nrm);
            }
            for (double& x : basis[v]) x /= nrm;
        }
    }
}

}  // namespace

std::vector<double> largest_symmetric_eigenvalues(const SymMatVec& matvec, std::size_t dim,
                                                  std::size_t k, double rel_tol,
                                                  std::size_t max_iters) {
    if (dim == 0 || k == 0 || k > dim) {
        throw ParamError("largest_symmetric_eigenvalues: need 1 <= k <= dim");
    }
    const std::size_t p = std::min(dim, k + 2);

    std::vector<std::vector<double>> q(p, std::vector<double>(dim));
    for (std::size_t v = 0; v < p; ++v) {
        for (std::size_t i = 0; i < dim; ++i) {
            q[v][i] = static_cast<double>(mix64(0x51ed2701u + 131u * v + i)) * 0x1.0p-64 - 0.5;
        }
    }
    orthonormalize(q);

    std::vector<std::vector<double>> y(p, std::vector<double>(dim));
    std::vector<std::vector<double>> z(p, std::vector<double>(dim));
    std::vector<double> prev(k, std::numeric_limits<double>::infinity());
    std::size_t stable = 0;

    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        for (std::size_t v = 0; v < p; ++v) matvec(q[v], y[v]);

        // Rayleigh-Ritz on the current basis.
        DenseMatrix b(p, p);
        for (std::size_t u = 0; u < p; ++u) {
            for (std::size_t v = u; v < p; ++v) {
                double dot = 0.0;
                for (std::size_t i = 0; i < dim; ++i) dot += q[u][i] * y[v][i];
                b(u, v) = dot;
                b(v, u) = dot;
            }
        }
        DenseMatrix vecs(p, p);
        for (std::size_t i = 0; i < p; ++i) vecs(i, i) = 1.0;
        DenseMatrix bw = b;
        jacobi_rotate(bw, &vecs);
        std::vector<std::size_t> order(p);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t l, std::size_t r) { return bw(l, l) > bw(r, r); });

        std::vector<double> ritz(p);
        for (std::size_t v = 0; v < p; ++v) ritz[v] = bw(order[v], order[v]);

        double worst = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double scale = std::max(std::abs(ritz[j]), 1e-300);
            worst = std::max(worst, std::abs(ritz[j] - prev[j]) / scale);
        }
        prev.assign(ritz.begin(), ritz.begin() + k);
        if (worst < rel_tol) {
            if (++stable >= 2) {
                return std::vector<double>(ritz.begin(), ritz.begin() + k);
            }
        } else {
            stable = 0;
        }

        // Rotate the image basis by the Ritz vectors, then re-orthonormalize.
        for (std::size_t v = 0; v < p; ++v) {
            std::fill(z[v].begin(), z[v].end(), 0.0);
            for (std::size_t u = 0; u < p; ++u) {
                const double w = vecs(u, order[v]);
                if (w == 0.0) continue;
                for (std::size_t i = 0; i < dim; ++i) z[v][i] += w * y[u][i];
            }
        }
        q.swap(z);
        orthonormalize(q);
    }
    throw NumericError("largest_symmetric_eigenvalues: subspace iteration did not converge");
}

}  // namespace betajac
