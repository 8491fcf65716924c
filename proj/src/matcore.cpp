#include "betajac/matcore.hpp"

#include <cmath>
#include <limits>

namespace betajac {

void validate(const Bidiagonal& b) {
    if (b.diag.empty()) throw ParamError("bidiagonal: empty diagonal");
    if (b.offdiag.size() + 1 != b.diag.size()) {
        throw ParamError("bidiagonal: offdiag length must be dim - 1");
    }
}

void validate(const SymTridiagonal& t) {
    if (t.diag.empty()) throw ParamError("tridiagonal: empty diagonal");
    if (t.offdiag.size() + 1 != t.diag.size()) {
        throw ParamError("tridiagonal: offdiag length must be dim - 1");
    }
}

SymTridiagonal gram(const Bidiagonal& b) {
    validate(b);
    const std::size_t n = b.dim();
    SymTridiagonal t;
    t.diag.resize(n);
    t.offdiag.resize(n - 1);
    if (b.orientation == Bidiagonal::Orientation::lower) {
        t.diag[0] = b.diag[0] * b.diag[0];
        for (std::size_t k = 1; k < n; ++k) {
            t.diag[k] = b.diag[k] * b.diag[k] + b.offdiag[k - 1] * b.offdiag[k - 1];
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
            t.offdiag[k] = b.diag[k] * b.offdiag[k];
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            t.diag[k] = b.diag[k] * b.diag[k];
            if (k + 1 < n) t.diag[k] += b.offdiag[k] * b.offdiag[k];
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
            t.offdiag[k] = b.offdiag[k] * b.diag[k + 1];
        }
    }
    return t;
}

SymTridiagonal double_embedding(const Bidiagonal& b) {
    validate(b);
    const std::size_t n = b.dim();
    SymTridiagonal t;
    t.diag.assign(2 * n, 0.0);
    t.offdiag.resize(2 * n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        t.offdiag[2 * k] = b.diag[k];
        if (k + 1 < n) t.offdiag[2 * k + 1] = b.offdiag[k];
    }
    return t;
}

DenseMatrix invert_lower_bidiagonal(const Bidiagonal& b) {
    validate(b);
    if (b.orientation != Bidiagonal::Orientation::lower) {
        throw ParamError("invert_lower_bidiagonal: matrix must be lower bidiagonal");
    }
    const std::size_t n = b.dim();
    bool has_zero_ratio = false;
    for (double a : b.diag) {
        if (a == 0.0) throw NumericError("invert_lower_bidiagonal: zero diagonal entry");
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.offdiag[k] == 0.0) has_zero_ratio = true;
    }

    DenseMatrix inv(n, n);
    if (has_zero_ratio) {
        // A zero subdiagonal entry decouples the matrix; plain column
        // recursion cannot under/overflow past the break.
        for (std::size_t j = 0; j < n; ++j) {
            double prod = 1.0 / b.diag[j];
            inv(j, j) = prod;
            for (std::size_t i = j + 1; i < n; ++i) {
                prod *= -b.offdiag[i - 1] / b.diag[i];
                inv(i, j) = prod;
            }
        }
        return inv;
    }

    // Prefix log-magnitudes and sign parities of the ratios r_k = -s_k / a_k,
    // so entry (i,j) = (1/a_i) * exp(P_i - P_j) with the collected sign.
    std::vector<double> log_prefix(n, 0.0);
    std::vector<int> sign_prefix(n, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double r = -b.offdiag[k] / b.diag[k];
        log_prefix[k + 1] = log_prefix[k] + std::log(std::abs(r));
        sign_prefix[k + 1] = sign_prefix[k] * (r < 0.0 ? -1 : 1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double log_ai = std::log(std::abs(b.diag[i]));
        const int sign_ai = b.diag[i] < 0.0 ? -1 : 1;
        for (std::size_t j = 0; j <= i; ++j) {
            const double mag = std::exp(log_prefix[i] - log_prefix[j] - log_ai);
            const int sign = sign_ai * sign_prefix[i] * sign_prefix[j];
            inv(i, j) = sign * mag;
        }
    }
    return inv;
}

double DetIdentity::prod_lambda() const { return std::exp(log_prod_lambda); }
double DetIdentity::prod_one_minus_lambda() const { return std::exp(log_prod_one_minus_lambda); }

DetIdentity det_identities(std::span<const double> C, std::span<const double> S,
                           std::span<const double> Ct, std::span<const double> St) {
    if (C.size() != S.size() || C.empty()) {
        throw ParamError("det_identities: C and S must be nonempty equal-length arrays");
    }
    if (Ct.size() != St.size() || Ct.size() + 1 != C.size()) {
        throw ParamError("det_identities: tilde arrays must have length n - 1");
    }
    double log_c2 = 0.0;
    double log_s2 = 0.0;
    double log_st2 = 0.0;
    for (double c : C) log_c2 += 2.0 * std::log(std::abs(c));
    for (double s : S) log_s2 += 2.0 * std::log(std::abs(s));
    for (double st : St) log_st2 += 2.0 * std::log(std::abs(st));
    return DetIdentity{log_c2 + log_st2, log_s2 + log_st2};
}

DenseMatrix to_dense(const Bidiagonal& b) {
    validate(b);
    const std::size_t n = b.dim();
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = b.diag[i];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.orientation == Bidiagonal::Orientation::lower) {
            a(k + 1, k) = b.offdiag[k];
        } else {
            a(k, k + 1) = b.offdiag[k];
        }
    }
    return a;
}

DenseMatrix to_dense(const SymTridiagonal& t) {
    validate(t);
    const std::size_t n = t.dim();
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = t.diag[i];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        a(k + 1, k) = t.offdiag[k];
        a(k, k + 1) = t.offdiag[k];
    }
    return a;
}

}  // namespace betajac
