#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground truth: exact integer rank and a from-scratch
 *        symmetric eigensolver.
 *
 * exact_nullity runs fraction-free (Bareiss) elimination over
 * arbitrary-precision integers: every division is exact by Sylvester's
 * identity, intermediate entries stay integral and bounded by Hadamard-type
 * minor growth, and no floating point appears anywhere. Pivoting picks the
 * largest-magnitude entry in the current column (deterministic).
 *
 * symmetric_eigenvalues is a cyclic Jacobi sweep, chosen over QR-type
 * iterations because it is unconditionally convergent on symmetric input
 * and trivially deterministic. It is a numeric probe, not a performance
 * target.
 */

#include <caynull/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace caynull {

struct oracle_report {
    int dimension = 0;
    int rank = 0;
    int nullity = 0;  // dimension - rank
    static constexpr const char* method = "exact-rank";

    friend bool operator==(const oracle_report&, const oracle_report&) = default;
};

inline oracle_report exact_nullity(const int_matrix& mat) {
    if (!mat.is_square())
        throw std::invalid_argument("exact_nullity: matrix must be square");
    const std::size_t n = mat.rows();
    int_matrix a = mat;
    bigint prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        // largest |entry| at or below the pivot row; skip all-zero columns
        std::size_t piv = rank;
        bigint best = 0;
        for (std::size_t i = rank; i < n; ++i) {
            bigint v = boost::multiprecision::abs(a(i, col));
            if (v > best) {
                best = std::move(v);
                piv = i;
            }
        }
        if (best == 0) continue;
        a.swap_rows(rank, piv);
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return {static_cast<int>(n), static_cast<int>(rank), static_cast<int>(n - rank)};
}

namespace detail {

inline double frobenius_norm(const real_matrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

inline double off_diagonal_norm(const real_matrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace detail

/// All eigenvalues of a symmetric matrix, sorted ascending. Cyclic Jacobi
/// sweeps in fixed (p,q) order until the off-diagonal norm drops below
/// tol * ||mat||_F; throws after 50 sweeps without convergence (never
/// observed at desk scale) or on asymmetric input.
inline std::vector<double> symmetric_eigenvalues(const real_matrix& mat, double tol) {
    if (!mat.is_square())
        throw std::invalid_argument("symmetric_eigenvalues: matrix must be square");
    if (tol <= 0.0)
        throw std::invalid_argument("symmetric_eigenvalues: tol must be positive");
    const std::size_t n = mat.rows();
    const double scale = detail::frobenius_norm(mat);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(mat(i, j) - mat(j, i)) > tol * std::max(scale, 1.0))
                throw std::invalid_argument("symmetric_eigenvalues: input is not symmetric");

    real_matrix a = mat;
    constexpr int max_sweeps = 50;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        const double off = detail::off_diagonal_norm(a);
        if (off <= tol * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double sgn = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    if (!converged && detail::off_diagonal_norm(a) > tol * scale)
        throw std::runtime_error("symmetric_eigenvalues: no convergence after 50 sweeps");

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

/// Count of |lambda| < zero_tol. Validated against exact_nullity on every
/// audited integer matrix; a mismatch fails the audit loudly.
inline int count_zero_eigenvalues(const std::vector<double>& eigs, double zero_tol = 1e-7) {
    int count = 0;
    for (double e : eigs)
        if (std::abs(e) < zero_tol) ++count;
    return count;
}

}  // namespace caynull
