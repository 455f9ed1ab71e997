#pragma once

/**
 * @file circulant.hpp
 * @brief Circulant matrices: associated polynomial, eigenvalues at roots of
 *        unity, and the cyclotomic singularity/nullity test.
 *
 * Y = circ(y) has row i equal to the first row rotated i positions right.
 * The associated polynomial is Psi(x) = y_0 + y_1 x + ... + y_{n-1} x^{n-1};
 * its values at the n-th roots of unity are exactly the eigenvalues of Y.
 * For integer y, Y is singular iff some cyclotomic Phi_d with d | n divides
 * Psi, and the nullity is the sum of phi(d) over such d. That divisibility
 * scan is the complete solver for Cayley graphs over C_n.
 *
 * Singularity is decided ONLY by exact division; the complex eigenvalues are
 * advisory (values at roots of unity can be irrational and near-zero).
 */

#include <caynull/intpoly.hpp>
#include <caynull/matrix.hpp>
#include <caynull/report.hpp>

#include <complex>
#include <stdexcept>
#include <vector>

namespace caynull {

struct circulant_matrix {
    std::vector<bigint> first_row;

    circulant_matrix() = default;
    explicit circulant_matrix(std::vector<bigint> row) : first_row(std::move(row)) {
        if (first_row.empty()) throw std::invalid_argument("circulant: empty first row");
    }
    explicit circulant_matrix(const std::vector<int>& row)
        : circulant_matrix(std::vector<bigint>(row.begin(), row.end())) {}

    int order() const { return static_cast<int>(first_row.size()); }
};

/// Psi with coefficient j equal to y_j, canonicalized (trailing zeros drop,
/// so the degree can be below n-1 and the zero row gives the zero polynomial).
inline int_polynomial associated_polynomial(const circulant_matrix& y) {
    return int_polynomial(y.first_row);
}

/// Eigenvalues {Psi(w^j) : j = 0..n-1} in index order (not sorted), so callers
/// can correlate j with its cyclotomic index d = n / gcd(n, j).
inline std::vector<std::complex<double>> circulant_eigenvalues(const circulant_matrix& y) {
    const int n = y.order();
    const int_polynomial psi = associated_polynomial(y);
    std::vector<std::complex<double>> eigs;
    eigs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) eigs.push_back(eval_at_unity_root(psi, n, j));
    return eigs;
}

inline int_matrix expand_circulant(const circulant_matrix& y) {
    const auto n = static_cast<std::size_t>(y.order());
    int_matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = y.first_row[(j + n - i) % n];
    return a;
}

/// The cyclotomic nullity scan: for each d | n with Phi_d | Psi, record a
/// contribution of phi(d). The zero polynomial is divisible by every Phi_d,
/// so the zero matrix reports full nullity n = sum of phi(d) over d | n.
inline nullity_report circulant_nullity(const circulant_matrix& y) {
    const int n = y.order();
    const int_polynomial psi = associated_polynomial(y);
    nullity_report report;
    for (int d : divisors(n)) {
        if (!divides(cyclotomic(d), psi)) continue;
        const int phi = totient(d);
        report.contributions.push_back({d, divisor_source::psi_prime, phi});
        report.total += phi;
    }
    report.singular = report.total > 0;
    return report;
}

}  // namespace caynull
