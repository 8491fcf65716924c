#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "betajac/matcore.hpp"

namespace betajac {

/// Which extreme eigenvalues to extract and to what bracket width.
struct SpectrumQuery {
    enum class Side { smallest, largest };

    std::size_t count = 1;
    Side side = Side::smallest;
    double tolerance = 1e-12;
};

/// Number of eigenvalues of T strictly below x, from the sign changes of the
/// shifted LDL^T recurrence. Zero pivots are replaced by a tiny negative
/// value proportional to ||T|| so the count stays monotone in x.
std::size_t sturm_count(const SymTridiagonal& t, double x);

/// The k smallest (or largest) eigenvalues of T, each bracketed by Sturm
/// bisection down to q.tolerance. Returned sorted ascending.
std::vector<double> extreme_eigenvalues(const SymTridiagonal& t, const SpectrumQuery& q);

/// Full spectrum by bisection, ascending.
std::vector<double> full_spectrum(const SymTridiagonal& t, double tolerance = 1e-12);

/// Full spectrum of a dense symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm falls below 1e-12 * ||A||.
/// Ascending. Throws ParamError when the input is not symmetric to 1e-12
/// relative.
std::vector<double> dense_sym_eigen(const DenseMatrix& a);

/// Singular values of a dense square matrix by one-sided Jacobi rotations
/// (columns are orthogonalized pairwise). Ascending. Unlike the symmetric
/// eigensolvers this achieves high relative accuracy even for singular
/// values many orders of magnitude below the norm, which the log-space
/// determinant and hard-edge identities need.
std::vector<double> dense_singular_values(const DenseMatrix& a);

/// y = A x for an implicitly represented symmetric matrix.
using SymMatVec = std::function<void(const std::vector<double>& x, std::vector<double>& y)>;

/// Top-k eigenvalues of a symmetric positive semidefinite operator by block
/// subspace iteration with Rayleigh-Ritz extraction. Start vectors are
/// derived from a fixed internal seed, so results are reproducible.
/// Returned descending.
std::vector<double> largest_symmetric_eigenvalues(const SymMatVec& matvec, std::size_t dim,
                                                  std::size_t k, double rel_tol = 1e-12,
                                                  std::size_t max_iters = 2000);

}  // namespace betajac
