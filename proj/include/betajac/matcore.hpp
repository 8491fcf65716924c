#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "betajac/errors.hpp"

namespace betajac {

/// Bidiagonal matrix: diagonal of length n plus one off-diagonal of length
/// n-1, stored below (lower) or above (upper) the diagonal.
struct Bidiagonal {
    enum class Orientation { lower, upper };

    std::vector<double> diag;
    std::vector<double> offdiag;
    Orientation orientation = Orientation::lower;

    std::size_t dim() const { return diag.size(); }
};

/// Symmetric tridiagonal matrix. The spectrum depends only on |offdiag|,
/// which is what makes the signed hard-edge model W interchangeable with M.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t dim() const { return diag.size(); }
};

/// Dense row-major matrix, used for bidiagonal inverses, kernel operators
/// and the Jacobi-rotation oracle.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

void validate(const Bidiagonal& b);
void validate(const SymTridiagonal& t);

/// B * B^T as a symmetric tridiagonal. For a lower bidiagonal with diagonal
/// x and subdiagonal y this is diag(x_1^2, x_k^2 + y_{k-1}^2) with
/// off-diagonal x_k * y_k.
SymTridiagonal gram(const Bidiagonal& b);

/// The 2n x 2n zero-diagonal tridiagonal whose off-diagonal interleaves
/// a_1, b_1, a_2, ..., a_n; its spectrum is { +/- sigma_i(B) }.
SymTridiagonal double_embedding(const Bidiagonal& b);

/// Exact entrywise inverse of a lower bidiagonal matrix with nonzero
/// diagonal: [B^-1]_{ii} = 1/a_i and, for j < i,
/// [B^-1]_{ij} = (1/a_i) prod_{k=j..i-1} (-s_k / a_k) with s_k the stored
/// subdiagonal entries. Products are accumulated in log space so that
/// chains of hundreds of ratios neither overflow nor underflow.
DenseMatrix invert_lower_bidiagonal(const Bidiagonal& b);

/// Predicted determinant identities for a beta-Jacobi angle draw:
/// prod lambda_i   = prod C_k^2  * prod St_k^2
/// prod (1-lambda) = prod S_k^2  * prod St_k^2
/// Logs are the primary representation; raw products underflow for n ~ 50.
struct DetIdentity {
    double log_prod_lambda;
    double log_prod_one_minus_lambda;

    double prod_lambda() const;
    double prod_one_minus_lambda() const;
};

DetIdentity det_identities(std::span<const double> C, std::span<const double> S,
                           std::span<const double> Ct, std::span<const double> St);

/// Dense copies, mostly for oracles and debugging.
DenseMatrix to_dense(const Bidiagonal& b);
DenseMatrix to_dense(const SymTridiagonal& t);

}  // namespace betajac
