#pragma once

/**
 * @file nullity.hpp
 * @brief The cyclotomic nullity method for Cayley graphs over C_n and D_n.
 *
 * Cyclic case (|V| = n): the adjacency matrix is circulant and the
 * divisibility scan in circulant.hpp is exact.
 *
 * Dihedral case (|V| = 2n): from the connecting set split H = H' u H''
 * build
 *
 *     Psi'(x)  = sum x^k over k in R        Psi''(x) = sum x^k over k in S
 *     Delta+   = Psi' + Psi''               Delta-   = Psi' - Psi''
 *
 * The block identity det(xI - A) = det(xI - (M+N)) * det(xI - (M-N)) holds
 * for any A = [M N; N M], so the spectrum of A is the multiset union of the
 * spectra of M+N and M-N and nullities add. The divisibility count
 *
 *     total = sum of phi(d) over d | n with Phi_d | Delta+,
 *           + sum of phi(d) over d | n with Phi_d | Delta-
 *
 * is a certified LOWER bound on the nullity: every hit yields an explicit
 * kernel vector (see audit.hpp). It is not always exact, because M+N and
 * M-N are not circulant (M shifts right, N shifts left), so Delta+/Delta-
 * are not their associated polynomials in the circulant sense. Instances
 * where the count undercounts are first-class data for the audit, not
 * errors. A d dividing both deltas contributes phi(d) twice, the only
 * reading consistent with the additive block split.
 */

#include <caynull/adjacency.hpp>
#include <caynull/circulant.hpp>
#include <caynull/group.hpp>
#include <caynull/intpoly.hpp>
#include <caynull/oracle.hpp>
#include <caynull/report.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace caynull {

struct delta_pair {
    int_polynomial psi_prime;         // 0/1 coefficients, support = R
    int_polynomial psi_double_prime;  // 0/1 coefficients, support = S
    int_polynomial delta_plus;        // psi_prime + psi_double_prime
    int_polynomial delta_minus;       // psi_prime - psi_double_prime

    friend bool operator==(const delta_pair&, const delta_pair&) = default;
};

inline delta_pair build_deltas(const connecting_set& cs) {
    detail::require_valid(cs, graph_mode::dihedral);
    delta_pair d;
    d.psi_prime = int_polynomial::from_exponents(cs.rotations);
    d.psi_double_prime = int_polynomial::from_exponents(cs.reflections);
    d.delta_plus = d.psi_prime + d.psi_double_prime;
    d.delta_minus = d.psi_prime - d.psi_double_prime;
    return d;
}

/// Expanded M+N and M-N as dense n x n integer matrices.
inline std::pair<int_matrix, int_matrix> split_blocks(const block_adjacency& adj) {
    const int_matrix m = expand_m_block(adj);
    const int_matrix nb = expand_n_block(adj);
    return {m + nb, m - nb};
}

/// The dihedral divisibility count described in the header comment.
/// Contributions are listed Delta+ first, then Delta-, d ascending within
/// each. A zero Delta- (R and S equal as index sets, so Psi' = Psi'') is
/// divisible by every Phi_d and contributes the full sum phi(d) over
/// d | n; that is still a certified count, one kernel vector per root.
inline nullity_report paper_nullity_dihedral(const connecting_set& cs) {
    const delta_pair dp = build_deltas(cs);
    nullity_report report;
    for (divisor_source src : {divisor_source::delta_plus, divisor_source::delta_minus}) {
        const int_polynomial& delta =
            src == divisor_source::delta_plus ? dp.delta_plus : dp.delta_minus;
        for (int d : divisors(cs.n)) {
            if (!divides(cyclotomic(d), delta)) continue;
            const int phi = totient(d);
            report.contributions.push_back({d, src, phi});
            report.total += phi;
        }
    }
    report.singular = report.total > 0;
    return report;
}

/// Cyclic case: delegate to the circulant scan; contributions carry the
/// psi_prime tag.
inline nullity_report paper_nullity_cyclic(int n, const std::set<int>& rotations) {
    return circulant_nullity(circulant_matrix(build_cyclic_adjacency(n, rotations)));
}

/// Nullity count for an instance in either mode.
inline nullity_report paper_nullity(graph_mode mode, const connecting_set& cs) {
    if (mode == graph_mode::cyclic) return paper_nullity_cyclic(cs.n, cs.rotations);
    return paper_nullity_dihedral(cs);
}

struct prime_power_check {
    bool size_unbalanced = false;  // |R| != |S|
    bool small = false;            // |R| + |S| < p
    bool criterion_met = false;    // both
};

/// n = p^s decomposition, if n is a prime power.
inline std::optional<std::pair<int, int>> prime_power_decompose(int n) {
    if (n < 2) return std::nullopt;
    int p = 0;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) return std::make_pair(n, 1);  // n prime
    int m = n, s = 0;
    while (m % p == 0) {
        m /= p;
        ++s;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, s);
}

/// Non-singularity criterion for D_{p^s}: |H cap C| != |H cap Cb| and
/// |H| < p. A sufficient-condition predicate only -- the audit checks it
/// against the exact-rank oracle instead of trusting it.
inline prime_power_check p_power_criterion(int p, int s, const connecting_set& cs) {
    if (s < 1) throw std::invalid_argument("p_power_criterion: s must be >= 1");
    auto pp = prime_power_decompose(cs.n);
    if (!pp || pp->first != p || pp->second != s)
        throw std::invalid_argument("p_power_criterion: n is not the stated prime power");
    prime_power_check c;
    const auto r = static_cast<int>(cs.rotations.size());
    const auto t = static_cast<int>(cs.reflections.size());
    c.size_unbalanced = r != t;
    c.small = r + t < p;
    c.criterion_met = c.size_unbalanced && c.small;
    return c;
}

enum class transitive_case { cyclic, dihedral };

/// Faithful transitive dihedral actions admit exactly two orbit sizes.
inline transitive_case dispatch_transitive_case(int vertex_count, int n) {
    if (vertex_count == n) return transitive_case::cyclic;
    if (vertex_count == 2 * n) return transitive_case::dihedral;
    throw std::invalid_argument(
        "dispatch_transitive_case: a faithful transitive D_n action has |V| = n "
        "(C_n regular) or |V| = 2n (D_n regular); got |V| = " +
        std::to_string(vertex_count) + " with n = " + std::to_string(n));
}

/// Test probe for the block split identity: the spectrum of A must equal
/// the multiset union of the spectra of M+N and M-N (numerically, via the
/// Jacobi probe) and the exact nullities must add (via the exact-rank
/// oracle).
inline bool spectrum_split_check(const block_adjacency& adj, double eig_tol = 1e-8,
                                 double jacobi_tol = 1e-10) {
    const int_matrix a = expand_block_adjacency(adj);
    auto [plus, minus] = split_blocks(adj);

    const oracle_report on_a = exact_nullity(a);
    const oracle_report on_plus = exact_nullity(plus);
    const oracle_report on_minus = exact_nullity(minus);
    if (on_a.nullity != on_plus.nullity + on_minus.nullity) return false;

    std::vector<double> whole = symmetric_eigenvalues(to_real(a), jacobi_tol);
    std::vector<double> parts = symmetric_eigenvalues(to_real(plus), jacobi_tol);
    std::vector<double> minus_eigs = symmetric_eigenvalues(to_real(minus), jacobi_tol);
    parts.insert(parts.end(), minus_eigs.begin(), minus_eigs.end());
    std::sort(parts.begin(), parts.end());
    if (whole.size() != parts.size()) return false;
    for (std::size_t i = 0; i < whole.size(); ++i)
        if (std::abs(whole[i] - parts[i]) > eig_tol) return false;
    return true;
}

}  // namespace caynull
