#include "betajac/limitops.hpp"

#include <algorithm>
#include <cmath>

#include "betajac/eigencore.hpp"

namespace betajac {

std::size_t GridSpec::points() const {
    return static_cast<std::size_t>(std::ceil(length / step - 1e-9)) + 1;
}

void validate(const GridSpec& g) {
    if (!(g.length > 0.0) || !(g.step > 0.0) || g.step > g.length * (1.0 + 1e-12)) {
        throw ParamError("grid: need 0 < step <= length");
    }
    if (g.points() < 3) throw ParamError("grid: need at least 3 points");
}

SymTridiagonal laplacian_dirichlet(const GridSpec& grid) {
    validate(grid);
    const std::size_t interior = grid.points() - 2;
    const double h2 = grid.step * grid.step;
    SymTridiagonal t;
    t.diag.assign(interior, 2.0 / h2);
    t.offdiag.assign(interior - 1, -1.0 / h2);
    return t;
}

namespace {

void check_path_covers(const GridSpec& grid, const BrownianPath& path) {
    if (!(path.step > 0.0) ||
        std::abs(path.step - grid.step) > 1e-12 * std::max(1.0, grid.step)) {
        throw ParamError("path step does not match the grid step");
    }
    if (path.values.size() < grid.points()) {
        throw ParamError("path does not cover the grid");
    }
    if (path.values.empty() || path.values[0] != 0.0) {
        throw ParamError("path must start at 0");
    }
}

}  // namespace

SymTridiagonal sae_discretize(double beta, const GridSpec& grid, const BrownianPath& path) {
    if (!(beta > 0.0)) throw ParamError("sae: beta must be positive");
    validate(grid);
    check_path_covers(grid, path);
    SymTridiagonal t = laplacian_dirichlet(grid);
    const double h = grid.step;
    const double noise = 2.0 / std::sqrt(beta);
    for (std::size_t i = 1; i <= t.dim(); ++i) {
        t.diag[i - 1] += static_cast<double>(i) * h +
                         noise * (path.values[i + 1] - path.values[i]) / h;
    }
    return t;
}

KernelOperator sbo_inverse_kernel(double beta, double a, const GridSpec& grid,
                                  const BrownianPath& path) {
    if (!(beta > 0.0)) throw ParamError("sbo: beta must be positive");
    if (!(a > -1.0)) throw ParamError("sbo: need a > -1");
    validate(grid);
    check_path_covers(grid, path);

    const std::size_t n = grid.points() - 1;  // nodes h, 2h, ..., L
    const double h = grid.step;
    const double noise = 2.0 / std::sqrt(beta);

    // Cumulative trapezoid of e^{a z + (2/sqrt(beta)) b(z)}.
    std::vector<double> cumulative(n + 1, 0.0);
    double prev = 1.0;  // integrand at z = 0
    for (std::size_t j = 1; j <= n; ++j) {
        const double f = std::exp(a * static_cast<double>(j) * h + noise * path.values[j]);
        cumulative[j] = cumulative[j - 1] + 0.5 * h * (prev + f);
        prev = f;
    }

    KernelOperator op;
    op.symmetric = true;
    op.nodes.resize(n);
    op.measure_weights.resize(n);
    std::vector<double> sqrt_w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * h;
        op.nodes[i] = x;
        op.measure_weights[i] = h * std::exp(-(a + 1.0) * x - noise * path.values[i + 1]);
        sqrt_w[i] = std::sqrt(op.measure_weights[i]);
    }
    op.matrix = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = sqrt_w[i] * sqrt_w[j] * cumulative[j + 1];
            op.matrix(i, j) = v;
            op.matrix(j, i) = v;
        }
    }
    return op;
}

std::vector<double> sbo_eigenvalues(const KernelOperator& op, std::size_t k) {
    if (!op.symmetric) throw ParamError("sbo_eigenvalues: operator is not symmetric");
    if (k == 0 || k > op.dim()) throw ParamError("sbo_eigenvalues: need 1 <= k <= dim");
    const DenseMatrix& A = op.matrix;
    const std::size_t n = op.dim();
    SymMatVec matvec = [&A, n](const std::vector<double>& x, std::vector<double>& y) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            const double* row = &A.data[i * n];
            for (std::size_t j = 0; j < n; ++j) sum += row[j] * x[j];
            y[i] = sum;
        }
    };
    std::vector<double> mu = largest_symmetric_eigenvalues(matvec, n, k, 1e-12);
    // mu descending, so the reciprocals are already ascending.
    std::vector<double> lambda(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(mu[i] > 0.0)) {
            throw NumericError("sbo_eigenvalues: discretized inverse has a nonpositive eigenvalue");
        }
        lambda[i] = 1.0 / mu[i];
    }
    return lambda;
}

KernelOperator limit_kernel_jacobi(const HardEdgeRegime& regime, double a, double beta,
                                   const GridSpec& grid, const BrownianPath& path) {
    if (!(beta > 0.0)) throw ParamError("limit kernel: beta must be positive");
    if (!(a > -1.0)) throw ParamError("limit kernel: need a > -1");
    validate(grid);
    if (grid.length > 1.0 + 1e-12) {
        throw ParamError("limit kernel: grid lives on (0, 1]");
    }
    check_path_covers(grid, path);

    const std::size_t n = grid.points() - 1;  // nodes h, ..., ~1
    const double h = grid.step;

    const bool finite_gamma = std::holds_alternative<GammaRegime>(regime);
    double gamma = 0.0;
    if (finite_gamma) {
        gamma = std::get<GammaRegime>(regime).gamma;
        if (!(gamma >= 1.0)) throw ParamError("limit kernel: need gamma >= 1");
    }

    auto r_fn = [&](double x) {
        if (finite_gamma) {
            return (2.0 * x + gamma - 1.0) / (std::sqrt(gamma) * std::sqrt(x * (x + gamma - 1.0)));
        }
        return 1.0 / std::sqrt(x);
    };
    auto s_fn = [&](double x) {
        if (finite_gamma) {
            return -0.5 * a * std::log(x) - 0.5 * std::log(gamma - 1.0 + 2.0 * x) -
                   0.5 * a * std::log(x + gamma - 1.0);
        }
        return -0.5 * a * std::log(x);
    };
    auto phi_fn = [&](double x) {
        if (finite_gamma) {
            return std::sqrt((2.0 * x + gamma - 1.0) / (beta * x * (x + gamma - 1.0)));
        }
        return 1.0 / std::sqrt(beta * x);
    };

    // Left-point Ito sums: Phi_i = int_{x_1}^{x_i} phi dB.
    std::vector<double> phi_cum(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double x = static_cast<double>(i) * h;
        phi_cum[i] = phi_cum[i - 1] + phi_fn(x) * (path.values[i + 1] - path.values[i]);
    }

    KernelOperator op;
    op.symmetric = false;
    op.nodes.resize(n);
    op.measure_weights.assign(n, h);
    std::vector<double> s_val(n), r_val(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * h;
        op.nodes[i] = x;
        s_val[i] = s_fn(x);
        r_val[i] = r_fn(x);
    }
    op.matrix = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            op.matrix(i, j) = h * r_val[i] * std::exp(s_val[i] - s_val[j] + phi_cum[i] - phi_cum[j]);
        }
    }
    return op;
}

KernelOperator discrete_inverse_kernel(const Bidiagonal& w, double m_n) {
    validate(w);
    if (!(m_n > 0.0)) throw ParamError("discrete inverse kernel: scale must be positive");
    const std::size_t n = w.dim();
    Bidiagonal scaled = w;
    const double root = std::sqrt(m_n);
    for (double& v : scaled.diag) v *= root;
    for (double& v : scaled.offdiag) v *= root;

    KernelOperator op;
    op.symmetric = false;
    op.nodes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        op.nodes[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    }
    op.measure_weights.assign(n, 1.0 / static_cast<double>(n));
    // Step-kernel value is n [X^-1]_{ij}; the sqrt(w_i w_j) weighting cancels
    // the n, so the operator matrix is exactly the bidiagonal inverse.
    op.matrix = invert_lower_bidiagonal(scaled);
    return op;
}

std::vector<double> gram_inverse_eigenvalues(const KernelOperator& op, std::size_t k) {
    if (k == 0 || k > op.dim()) throw ParamError("gram_inverse_eigenvalues: need 1 <= k <= dim");
    const DenseMatrix& C = op.matrix;
    const std::size_t n = op.dim();
    std::vector<double> tmp(n);
    SymMatVec matvec = [&C, &tmp, n](const std::vector<double>& x, std::vector<double>& y) {
        // y = C (C^T x); C is lower triangular here.
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t i = j; i < n; ++i) sum += C.data[i * n + j] * x[i];
            tmp[j] = sum;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            const double* row = &C.data[i * n];
            for (std::size_t j = 0; j <= i; ++j) sum += row[j] * tmp[j];
            y[i] = sum;
        }
    };
    std::vector<double> mu = largest_symmetric_eigenvalues(matvec, n, k, 1e-12);
    std::vector<double> lambda(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(mu[i] > 0.0)) {
            throw NumericError("gram_inverse_eigenvalues: nonpositive gram eigenvalue");
        }
        lambda[i] = 1.0 / mu[i];
    }
    return lambda;
}

}  // namespace betajac
