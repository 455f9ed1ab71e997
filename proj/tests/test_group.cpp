#include <caynull/adjacency.hpp>
#include <caynull/group.hpp>
#include <caynull/matrix.hpp>

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace caynull;

namespace {

std::vector<group_element> all_elements(int n) {
    std::vector<group_element> out;
    for (int k = 0; k < n; ++k) out.push_back(rotation(n, k));
    for (int k = 0; k < n; ++k) out.push_back(reflection(n, k));
    return out;
}

// Independent adjacency construction straight from the membership test
// u ~ v iff v u^{-1} in H, for comparison with the block expansion.
int_matrix adjacency_by_membership(const connecting_set& cs) {
    const int n = cs.n;
    std::vector<group_element> verts;
    for (int k = 0; k < n; ++k) verts.push_back(rotation(n, k));
    for (int k = 0; k < n; ++k) verts.push_back(reflection(n, k));
    std::vector<group_element> h;
    for (int k : cs.rotations) h.push_back(rotation(n, k));
    for (int k : cs.reflections) h.push_back(reflection(n, k));
    int_matrix a(verts.size(), verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j) {
            const group_element diff = multiply(verts[j], inverse(verts[i]));
            for (const auto& e : h)
                if (e == diff) a(i, j) = 1;
        }
    return a;
}

connecting_set instance(int n, std::set<int> rot, std::set<int> ref) {
    return {n, std::move(rot), std::move(ref)};
}

}  // namespace

// =============================================================================
// Group multiplication
// =============================================================================

TEST(GroupElement, Multiplication) {
    // a^1 * a^3 = identity in D_4
    EXPECT_EQ(multiply(rotation(4, 1), rotation(4, 3)), identity_element(4));
    // reflections are involutions: (a^2 b)^2 = 1 in D_5
    EXPECT_EQ(multiply(reflection(5, 2), reflection(5, 2)), identity_element(5));
    // b * a = a^{-1} b = a^3 b in D_4
    EXPECT_EQ(multiply(reflection(4, 0), rotation(4, 1)), reflection(4, 3));
}

TEST(GroupElement, OrderMismatchRejected) {
    EXPECT_THROW(multiply(rotation(4, 1), rotation(5, 1)), std::invalid_argument);
}

TEST(GroupElement, DegenerateOrdersRejected) {
    EXPECT_THROW(rotation(2, 1), std::invalid_argument);
    EXPECT_THROW(identity_element(1), std::invalid_argument);
}

TEST(GroupElement, ExponentsReducedModN) {
    EXPECT_EQ(rotation(5, 7), rotation(5, 2));
    EXPECT_EQ(make_element(5, -1, true), reflection(5, 4));
}

TEST(GroupElement, AssociativityExhaustiveD6) {
    const auto elems = all_elements(6);
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems)
                ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
}

TEST(GroupElement, InversesExhaustiveD7) {
    for (const auto& x : all_elements(7)) {
        EXPECT_EQ(multiply(x, inverse(x)), identity_element(7));
        EXPECT_EQ(multiply(inverse(x), x), identity_element(7));
    }
}

// =============================================================================
// Connecting-set validation
// =============================================================================

TEST(Validation, ValidDihedralSplits) {
    const auto v = validate_connecting_set(instance(4, {1, 3}, {0}), graph_mode::dihedral, true);
    ASSERT_TRUE(v.ok);
    ASSERT_EQ(v.rotation_part.size(), 2u);
    EXPECT_EQ(v.rotation_part[0], rotation(4, 1));
    EXPECT_EQ(v.rotation_part[1], rotation(4, 3));
    ASSERT_EQ(v.reflection_part.size(), 1u);
    EXPECT_EQ(v.reflection_part[0], reflection(4, 0));
}

TEST(Validation, InverseClosureViolation) {
    const auto v = validate_connecting_set(instance(4, {1}, {0}), graph_mode::dihedral, true);
    ASSERT_FALSE(v.ok);
    EXPECT_EQ(v.violated, axiom::inverse_closed);
}

TEST(Validation, ReflectionsAloneCanGenerate) {
    const auto v = validate_connecting_set(instance(9, {}, {0, 1}), graph_mode::dihedral, true);
    EXPECT_TRUE(v.ok);
}

TEST(Validation, AxiomFailures) {
    EXPECT_EQ(validate_connecting_set(instance(2, {1}, {}), graph_mode::cyclic, true).violated,
              axiom::order_range);
    EXPECT_EQ(validate_connecting_set(instance(4, {}, {}), graph_mode::dihedral, true).violated,
              axiom::nonempty);
    EXPECT_EQ(validate_connecting_set(instance(4, {0}, {0}), graph_mode::dihedral, true).violated,
              axiom::identity_excluded);
    EXPECT_EQ(validate_connecting_set(instance(4, {1, 3}, {4}), graph_mode::dihedral, true).violated,
              axiom::element_range);
    EXPECT_EQ(validate_connecting_set(instance(4, {1, 3}, {0}), graph_mode::cyclic, true).violated,
              axiom::element_range);
    // single reflection: closure is {1, a^k b}, never all of D_n
    EXPECT_EQ(validate_connecting_set(instance(5, {}, {2}), graph_mode::dihedral, true).violated,
              axiom::generates);
    // gcd(6, 2, 4) = 2: closure reaches only even exponents
    EXPECT_EQ(validate_connecting_set(instance(6, {2, 4}, {}), graph_mode::cyclic, true).violated,
              axiom::generates);
}

TEST(Validation, DisconnectedAllowedWhenGenerationNotRequired) {
    EXPECT_TRUE(validate_connecting_set(instance(6, {2, 4}, {}), graph_mode::cyclic, false).ok);
    EXPECT_TRUE(validate_connecting_set(instance(5, {1, 4}, {}), graph_mode::dihedral, false).ok);
}

// The gcd shortcut must agree with the BFS closure everywhere (the closure
// is the reference semantics).
TEST(Validation, GcdFastPathMatchesClosure) {
    for (int n = 3; n <= 8; ++n) {
        const int slots = n / 2;
        for (int rm = 0; rm < (1 << slots); ++rm) {
            std::set<int> rot;
            for (int i = 0; i < slots; ++i)
                if (rm >> i & 1) {
                    rot.insert(i + 1);
                    rot.insert(n - i - 1);
                }
            if (!rot.empty()) {
                const auto cs = instance(n, rot, {});
                ASSERT_EQ(generates_by_closure(cs, graph_mode::cyclic),
                          generates_by_gcd(cs, graph_mode::cyclic))
                    << "cyclic n=" << n << " rm=" << rm;
            }
            for (int fm = 0; fm < (1 << n); ++fm) {
                std::set<int> ref;
                for (int k = 0; k < n; ++k)
                    if (fm >> k & 1) ref.insert(k);
                if (rot.empty() && ref.empty()) continue;
                const auto cs = instance(n, rot, ref);
                ASSERT_EQ(generates_by_closure(cs, graph_mode::dihedral),
                          generates_by_gcd(cs, graph_mode::dihedral))
                    << "dihedral n=" << n << " rm=" << rm << " fm=" << fm;
            }
        }
    }
}

// =============================================================================
// Adjacency construction
// =============================================================================

TEST(BlockAdjacency, FirstRows) {
    const auto adj = build_block_adjacency(instance(4, {1, 3}, {0}));
    EXPECT_EQ(adj.m_row, (std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(adj.n_row, (std::vector<int>{1, 0, 0, 0}));
}

TEST(BlockAdjacency, CompleteBipartiteFromAllReflections) {
    const auto adj = build_block_adjacency(instance(3, {}, {0, 1, 2}));
    EXPECT_EQ(adj.m_row, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(adj.n_row, (std::vector<int>{1, 1, 1}));
    const auto a = expand_block_adjacency(adj);
    // K_{3,3}: off-diagonal blocks all ones, diagonal blocks zero
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            EXPECT_EQ(a(i, j), ((i < 3) != (j < 3)) ? 1 : 0);
}

TEST(BlockAdjacency, InvalidSetRejected) {
    EXPECT_THROW(build_block_adjacency(instance(4, {1}, {0})), std::invalid_argument);
}

TEST(CyclicAdjacency, FirstRows) {
    EXPECT_EQ(build_cyclic_adjacency(4, {1, 3}), (std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(build_cyclic_adjacency(5, {1, 4}), (std::vector<int>{0, 1, 0, 0, 1}));
    EXPECT_THROW(build_cyclic_adjacency(5, {1}), std::invalid_argument);
}

// Every valid dihedral instance up to n = 6: the expanded matrix agrees
// bit-for-bit with the direct membership construction, and satisfies the
// row-sum/trace invariants.
TEST(BlockAdjacency, MembershipAgreementAndInvariantsExhaustive) {
    for (int n = 3; n <= 6; ++n) {
        const int slots = n / 2;
        for (int rm = 0; rm < (1 << slots); ++rm) {
            std::set<int> rot;
            for (int i = 0; i < slots; ++i)
                if (rm >> i & 1) {
                    rot.insert(i + 1);
                    rot.insert(n - i - 1);
                }
            for (int fm = 0; fm < (1 << n); ++fm) {
                std::set<int> ref;
                for (int k = 0; k < n; ++k)
                    if (fm >> k & 1) ref.insert(k);
                const auto cs = instance(n, rot, ref);
                if (!validate_connecting_set(cs, graph_mode::dihedral, false).ok) continue;

                const auto adj = build_block_adjacency(cs);
                const auto a = expand_block_adjacency(adj);
                ASSERT_EQ(a, adjacency_by_membership(cs)) << "n=" << n;

                ASSERT_EQ(a, a.transpose());
                const auto degree = bigint(rot.size() + ref.size());
                for (std::size_t i = 0; i < a.rows(); ++i) {
                    bigint row_sum = 0;
                    for (std::size_t j = 0; j < a.cols(); ++j) row_sum += a(i, j);
                    ASSERT_EQ(row_sum, degree);
                    ASSERT_EQ(a(i, i), 0);
                }
                ASSERT_EQ(a.trace(), 0);
                ASSERT_EQ((a * a).trace(), bigint(2 * n) * degree);

                const auto nb = expand_n_block(adj);
                ASSERT_EQ(nb, nb.transpose());
            }
        }
    }
}
