#pragma once

/**
 * @file adjacency.hpp
 * @brief Exact adjacency matrices for cyclic and dihedral Cayley graphs.
 *
 * Dihedral case (2n vertices, ordered 1, a, ..., a^{n-1}, b, ab, ...,
 * a^{n-1} b): the adjacency matrix has the block shape A = [M N; N M] with
 *
 *     M_{ij} = 1  iff  (j - i) mod n in R     (circulant, rows shift right)
 *     N_{ij} = 1  iff  (i + j) mod n in S     (anti-circulant, rows shift left)
 *
 * Both index rules come straight from the membership test u ~ v iff
 * v u^{-1} in H. N is symmetric by construction, so A is symmetric.
 * Note M shifts right while N shifts left: M+N and M-N are NOT circulant.
 *
 * Cyclic case (n vertices): A = circ(r) with r_j = 1 iff j in R.
 */

#include <caynull/group.hpp>
#include <caynull/matrix.hpp>

#include <set>
#include <stdexcept>
#include <vector>

namespace caynull {

/// First rows of the two blocks; everything else follows from the shift
/// orientations (M right, N left).
struct block_adjacency {
    int n = 0;
    std::vector<int> m_row;  // 0/1, length n, first row of M
    std::vector<int> n_row;  // 0/1, length n, first row of N

    friend bool operator==(const block_adjacency&, const block_adjacency&) = default;
};

namespace detail {

inline void require_valid(const connecting_set& cs, graph_mode mode) {
    // Generation is not needed to build a matrix; the structural axioms are.
    auto v = validate_connecting_set(cs, mode, /*require_generation=*/false);
    if (!v.ok)
        throw std::invalid_argument(std::string("invalid connecting set (") +
                                    axiom_name(v.violated) + "): " + v.detail);
}

}  // namespace detail

inline block_adjacency build_block_adjacency(const connecting_set& cs) {
    detail::require_valid(cs, graph_mode::dihedral);
    block_adjacency adj;
    adj.n = cs.n;
    adj.m_row.assign(static_cast<std::size_t>(cs.n), 0);
    adj.n_row.assign(static_cast<std::size_t>(cs.n), 0);
    for (int k : cs.rotations) adj.m_row[static_cast<std::size_t>(k)] = 1;
    for (int k : cs.reflections) adj.n_row[static_cast<std::size_t>(k)] = 1;
    return adj;
}

/// First row of the circulant adjacency of Cay(C_n, R).
inline std::vector<int> build_cyclic_adjacency(int n, const std::set<int>& rotations) {
    connecting_set cs{n, rotations, {}};
    detail::require_valid(cs, graph_mode::cyclic);
    std::vector<int> row(static_cast<std::size_t>(n), 0);
    for (int k : rotations) row[static_cast<std::size_t>(k)] = 1;
    return row;
}

inline int_matrix expand_m_block(const block_adjacency& adj) {
    const auto n = static_cast<std::size_t>(adj.n);
    int_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = adj.m_row[(j + n - i) % n];
    return m;
}

inline int_matrix expand_n_block(const block_adjacency& adj) {
    const auto n = static_cast<std::size_t>(adj.n);
    int_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = adj.n_row[(i + j) % n];
    return m;
}

/// The full 2n x 2n matrix [M N; N M].
inline int_matrix expand_block_adjacency(const block_adjacency& adj) {
    const auto n = static_cast<std::size_t>(adj.n);
    const int_matrix m = expand_m_block(adj);
    const int_matrix nb = expand_n_block(adj);
    int_matrix a(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = m(i, j);
            a(i, n + j) = nb(i, j);
            a(n + i, j) = nb(i, j);
            a(n + i, n + j) = m(i, j);
        }
    return a;
}

inline int_matrix expand_cyclic_adjacency(const std::vector<int>& first_row) {
    const std::size_t n = first_row.size();
    int_matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = first_row[(j + n - i) % n];
    return a;
}

/// Full adjacency for either mode, vertex order as documented above.
inline int_matrix build_adjacency_matrix(graph_mode mode, const connecting_set& cs) {
    if (mode == graph_mode::cyclic) {
        return expand_cyclic_adjacency(build_cyclic_adjacency(cs.n, cs.rotations));
    }
    return expand_block_adjacency(build_block_adjacency(cs));
}

}  // namespace caynull
