#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "betajac/matcore.hpp"
#include "betajac/randkit.hpp"

namespace betajac {

/// Uniform spatial grid {0, h, ..., ceil(L/h) h}.
struct GridSpec {
    double length = 0.0;
    double step = 0.0;

    std::size_t points() const;  // ceil(L/h) + 1
};

void validate(const GridSpec& g);

/// -d^2/dx^2 on the interior nodes with Dirichlet ends: diagonal 2/h^2,
/// off-diagonal -1/h^2.
SymTridiagonal laplacian_dirichlet(const GridSpec& grid);

/// Finite-difference stochastic Airy operator -d^2/dx^2 + x + (2/sqrt(beta)) b'
/// on the interior nodes of the grid, Dirichlet at 0 and L. The white noise
/// enters through the path increments: node x_i adds
/// (2/sqrt(beta)) (b((i+1)h) - b(ih)) / h to the diagonal.
/// The path must share the grid step and cover [0, L].
SymTridiagonal sae_discretize(double beta, const GridSpec& grid, const BrownianPath& path);

/// Discretized integral operator. `matrix` holds the measure-symmetrized
/// kernel sqrt(w_i w_j) k(x_i, x_j); `measure_weights` are the quadrature
/// weights of the underlying measure. Symmetric kernels (the Bessel inverse)
/// are diagonalized directly; one-sided kernels go through K K^T.
struct KernelOperator {
    std::vector<double> nodes;
    DenseMatrix matrix;
    std::vector<double> measure_weights;
    bool symmetric = false;

    std::size_t dim() const { return nodes.size(); }
};

/// Inverse stochastic Bessel operator on (0, L]:
///   g(x, y)  = int_0^{x^y} e^{a z + (2/sqrt(beta)) b(z)} dz   (trapezoid)
///   w_j      = h e^{-(a+1) x_j - (2/sqrt(beta)) b(x_j)}
///   A_ij     = sqrt(w_i w_j) g(x_i, x_j)
/// A is symmetric positive semidefinite.
KernelOperator sbo_inverse_kernel(double beta, double a, const GridSpec& grid,
                                  const BrownianPath& path);

/// Ascending Bessel-operator eigenvalues Lambda_i = 1 / mu_i, with mu the
/// largest eigenvalues of the symmetrized inverse matrix.
std::vector<double> sbo_eigenvalues(const KernelOperator& op, std::size_t k);

/// Hard-edge limit kernel regimes: n2/n -> gamma in [1, inf), or n2 >> n.
struct GammaRegime {
    double gamma = 1.0;
};
struct InfiniteRegime {};
using HardEdgeRegime = std::variant<GammaRegime, InfiniteRegime>;

/// Limit kernel k(x, y) = r(x) e^{s(x)-s(y)} e^{int_y^x phi dB} 1(y <= x) on
/// the grid {h, 2h, ..., 1} (the grid avoids the r singularity at 0). The
/// stochastic integral is the left-point Riemann sum of phi against the
/// path increments.
KernelOperator limit_kernel_jacobi(const HardEdgeRegime& regime, double a, double beta,
                                   const GridSpec& grid, const BrownianPath& path);

/// Step-kernel operator of the embedded inverse of sqrt(m_n) W; the spectrum
/// of (K K^T)^{-1} equals m_n spec(W W^T) exactly.
KernelOperator discrete_inverse_kernel(const Bidiagonal& w, double m_n);

/// Ascending eigenvalues of (K K^T)^{-1} for a one-sided kernel operator:
/// reciprocals of the top eigenvalues of C C^T.
std::vector<double> gram_inverse_eigenvalues(const KernelOperator& op, std::size_t k);

}  // namespace betajac
