#pragma once

/**
 * @file group.hpp
 * @brief Dihedral and cyclic group elements, connecting sets, validation.
 *
 * D_n = <a, b | a^n = b^2 = 1, bab = a^{-1}>, n >= 3. An element is a^k or
 * a^k b with the exponent always reduced mod n; a^k b means "rotate by k,
 * then reflect". The rotation subgroup C_n is the reflection-free part.
 *
 * A connecting set H = H' u H'' is given by the rotation exponent set R
 * (H' = {a^k : k in R}) and the reflection exponent set S
 * (H'' = {a^k b : k in S}). Validation checks the three connecting-set
 * axioms: 1 not in H, H = H^{-1}, and (when required) H generates the
 * group. Generation is decided by breadth-first closure of H under group
 * multiplication; a gcd shortcut is provided as an optimization but the
 * closure is the reference semantics.
 */

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace caynull {

struct group_element {
    int order_n = 3;     // n >= 3; D_1 and D_2 are degenerate presentations
    int exponent = 0;    // always in [0, n)
    bool reflection = false;

    friend bool operator==(const group_element&, const group_element&) = default;
};

inline group_element make_element(int n, int exponent, bool reflection) {
    if (n < 3) throw std::invalid_argument("group_element: order n must be >= 3");
    int k = exponent % n;
    if (k < 0) k += n;
    return {n, k, reflection};
}

inline group_element rotation(int n, int exponent) { return make_element(n, exponent, false); }
inline group_element reflection(int n, int exponent) { return make_element(n, exponent, true); }
inline group_element identity_element(int n) { return make_element(n, 0, false); }

/// Group product x*y under a^n = b^2 = 1, bab = a^{-1}.
/// (a^k b)(a^m b^t) = a^{k-m} b^{1+t} since b a^m = a^{-m} b.
inline group_element multiply(const group_element& x, const group_element& y) {
    if (x.order_n != y.order_n)
        throw std::invalid_argument("multiply: elements from different groups");
    const int n = x.order_n;
    if (!x.reflection) return make_element(n, x.exponent + y.exponent, y.reflection);
    return make_element(n, x.exponent - y.exponent, !y.reflection);
}

inline group_element inverse(const group_element& x) {
    if (x.reflection) return x;  // reflections are involutions
    return make_element(x.order_n, -x.exponent, false);
}

enum class graph_mode { cyclic, dihedral };

inline const char* mode_name(graph_mode m) {
    return m == graph_mode::cyclic ? "cyclic" : "dihedral";
}

/// Connecting set data for Cay(C_n, H') or Cay(D_n, H' u H'').
struct connecting_set {
    int n = 3;
    std::set<int> rotations;    // R, subset of [1, n)
    std::set<int> reflections;  // S, subset of [0, n)

    friend bool operator==(const connecting_set&, const connecting_set&) = default;
};

enum class axiom {
    order_range,        // n >= 3
    element_range,      // exponents within the group, no reflections in cyclic mode
    identity_excluded,  // 1_G not in H
    inverse_closed,     // H^{-1} = H
    nonempty,           // H != {}
    generates,          // <H> = G
};

inline const char* axiom_name(axiom a) {
    switch (a) {
        case axiom::order_range: return "order_range";
        case axiom::element_range: return "element_range";
        case axiom::identity_excluded: return "identity_excluded";
        case axiom::inverse_closed: return "inverse_closed";
        case axiom::nonempty: return "nonempty";
        case axiom::generates: return "generates";
    }
    return "?";
}

struct validation_result {
    bool ok = false;
    axiom violated = axiom::order_range;  // meaningful only when !ok
    std::string detail;
    std::vector<group_element> rotation_part;    // H'
    std::vector<group_element> reflection_part;  // H''

    static validation_result failure(axiom a, std::string detail) {
        validation_result r;
        r.ok = false;
        r.violated = a;
        r.detail = std::move(detail);
        return r;
    }
};

/// Reference generation test: breadth-first closure of H under group
/// multiplication. H is inverse-closed so the closure is the generated
/// subgroup; compare its size with |G|.
inline bool generates_by_closure(const connecting_set& cs, graph_mode mode) {
    const int n = cs.n;
    const int group_order = mode == graph_mode::dihedral ? 2 * n : n;
    std::vector<group_element> gens;
    for (int k : cs.rotations) gens.push_back(rotation(n, k));
    for (int k : cs.reflections) gens.push_back(reflection(n, k));
    if (gens.empty()) return false;

    // element id: exponent + (reflection ? n : 0)
    auto id_of = [n](const group_element& e) { return e.exponent + (e.reflection ? n : 0); };
    std::vector<char> seen(2 * static_cast<std::size_t>(n), 0);
    std::vector<group_element> frontier{identity_element(n)};
    seen[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
        std::vector<group_element> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                group_element p = multiply(g, e);
                auto idx = static_cast<std::size_t>(id_of(p));
                if (!seen[idx]) {
                    seen[idx] = 1;
                    ++count;
                    next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    return count == group_order;
}

/// gcd shortcut for the generation test: gcd of n, every k in R, and every
/// pairwise difference of S must be 1 (with S nonempty in dihedral mode).
/// Verified against the closure in tests; the closure stays authoritative.
inline bool generates_by_gcd(const connecting_set& cs, graph_mode mode) {
    int g = cs.n;
    for (int k : cs.rotations) g = std::gcd(g, k);
    if (mode == graph_mode::dihedral) {
        if (cs.reflections.empty()) return false;
        const int s0 = *cs.reflections.begin();
        for (int s : cs.reflections) g = std::gcd(g, s - s0);
    }
    return g == 1;
}

/// Checks the connecting-set axioms and, on success, returns the split into
/// H' (rotations) and H'' (reflections). Generation uses the BFS closure.
inline validation_result validate_connecting_set(const connecting_set& cs, graph_mode mode,
                                                 bool require_generation) {
    using vr = validation_result;
    const int n = cs.n;
    if (n < 3)
        return vr::failure(axiom::order_range,
                           "n must be >= 3 (D_1 and D_2 are degenerate presentations)");
    if (mode == graph_mode::cyclic && !cs.reflections.empty())
        return vr::failure(axiom::element_range, "cyclic mode admits no reflection part");
    for (int k : cs.rotations) {
        if (k == 0)
            return vr::failure(axiom::identity_excluded, "rotation exponent 0 is the identity");
        if (k < 0 || k >= n)
            return vr::failure(axiom::element_range,
                               "rotation exponent " + std::to_string(k) + " outside [1," +
                                   std::to_string(n) + ")");
    }
    for (int k : cs.reflections)
        if (k < 0 || k >= n)
            return vr::failure(axiom::element_range,
                               "reflection exponent " + std::to_string(k) + " outside [0," +
                                   std::to_string(n) + ")");
    if (cs.rotations.empty() && cs.reflections.empty())
        return vr::failure(axiom::nonempty, "connecting set is empty");
    for (int k : cs.rotations) {
        const int inv = (n - k) % n;
        if (!cs.rotations.count(inv))
            return vr::failure(axiom::inverse_closed,
                               "rotation " + std::to_string(k) + " present but its inverse " +
                                   std::to_string(inv) + " is not");
    }
    // Reflections are involutions, so H'' is inverse-closed for any S.
    if (require_generation && !generates_by_closure(cs, mode)) {
        std::string detail = "closure of H is a proper subgroup";
        if (mode == graph_mode::dihedral && cs.reflections.empty())
            detail = "no reflections: closure stays inside C_n";
        return vr::failure(axiom::generates, detail);
    }

    validation_result r;
    r.ok = true;
    for (int k : cs.rotations) r.rotation_part.push_back(rotation(n, k));
    for (int k : cs.reflections) r.reflection_part.push_back(reflection(n, k));
    return r;
}

}  // namespace caynull
