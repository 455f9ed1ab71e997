#pragma once

/**
 * @file audit.hpp
 * @brief Count-vs-oracle auditing: single instances, censuses, kernel
 *        vector certificates.
 *
 * An audit pairs the cyclotomic divisibility count with the exact-rank
 * oracle on the same instance. Agreement is classified as
 *
 *     equal             count == exact nullity
 *     paper_undercounts count <  exact nullity (recorded, expected sometimes)
 *     violation         count >  exact nullity (must never happen; the
 *                       divisibility count is certified below)
 *
 * Certificate: if Phi_d divides Delta+ (resp. Delta-), then for any
 * primitive d-th root of unity w the vector
 *
 *     v = (1, w, ..., w^{n-1}, +1, +w^{-1}, ..., +w^{-(n-1)})   for Delta+
 *     v = (1, w, ..., w^{n-1}, -1, -w^{-1}, ..., -w^{-(n-1)})   for Delta-
 *
 * satisfies A v = 0: with e = +-1, the first block of A v is
 * w^i (Psi'(w) + e conj(Psi''(w))) and the second is
 * w^{-i} e (Psi'(w) + e Psi''(w)); Delta(w) = 0 forces e Psi''(w) =
 * -Psi'(w), which is real because inverse closure of R makes Psi'(w) real,
 * so both brackets vanish. Note the second block runs through CONJUGATE
 * powers of w -- with +-w^{+i} in the second block the product does not
 * vanish once d > 2 and only one delta is hit. null_vector_check verifies
 * the certificate numerically on demand; in the cyclic case the vector is
 * just (1, w, ..., w^{n-1}).
 *
 * Censuses enumerate connecting sets (rotations as unions of inverse pairs
 * {k, n-k}, reflections as arbitrary nonempty subsets), audit each one, and
 * summarize. Enumeration order is deterministic; sampled mode draws from a
 * seeded mt19937_64, so identical (spec, seed) give identical output.
 */

#include <caynull/adjacency.hpp>
#include <caynull/group.hpp>
#include <caynull/nullity.hpp>
#include <caynull/oracle.hpp>
#include <caynull/report.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace caynull {

enum class agreement_kind { equal, paper_undercounts, violation };

inline const char* agreement_name(agreement_kind a) {
    switch (a) {
        case agreement_kind::equal: return "equal";
        case agreement_kind::paper_undercounts: return "paper_undercounts";
        case agreement_kind::violation: return "violation";
    }
    return "?";
}

inline agreement_kind agreement_from_name(const std::string& s) {
    if (s == "equal") return agreement_kind::equal;
    if (s == "paper_undercounts") return agreement_kind::paper_undercounts;
    if (s == "violation") return agreement_kind::violation;
    throw std::invalid_argument("unknown agreement kind: " + s);
}

/// Results of the optional per-instance verification gates.
struct instance_checks {
    bool spectrum_split_ok = true;   // block split identity (dihedral only)
    bool null_vectors_ok = true;     // every divisibility hit certifies a kernel vector
    bool jacobi_consistent = true;   // numeric zero count == exact nullity

    bool all_ok() const { return spectrum_split_ok && null_vectors_ok && jacobi_consistent; }
    friend bool operator==(const instance_checks&, const instance_checks&) = default;
};

struct audit_record {
    graph_mode mode = graph_mode::dihedral;
    int n = 0;
    std::vector<int> rotations;
    std::vector<int> reflections;
    nullity_report paper;
    oracle_report oracle;
    agreement_kind agreement = agreement_kind::equal;
    /// exact nullities of (M+N, M-N); present on dihedral disagreements
    std::optional<std::pair<int, int>> block_nullities;
    std::optional<instance_checks> checks;

    friend bool operator==(const audit_record&, const audit_record&) = default;
};

/// Relative residual ||A v|| / ||v|| of the kernel-vector certificate for
/// one divisibility hit. Preconditions: d | n and Phi_d divides the named
/// source polynomial (psi_prime in cyclic mode, a delta in dihedral mode);
/// violations throw.
inline double null_vector_residual(graph_mode mode, const connecting_set& cs, int d,
                                   divisor_source source) {
    detail::require_valid(cs, mode);
    if (d < 1 || cs.n % d != 0)
        throw std::invalid_argument("null_vector_check: d must divide n");
    if ((mode == graph_mode::cyclic) != (source == divisor_source::psi_prime))
        throw std::invalid_argument("null_vector_check: source does not match mode");

    int_polynomial poly;
    double sign = 1.0;
    if (mode == graph_mode::cyclic) {
        poly = int_polynomial::from_exponents(cs.rotations);
    } else {
        const delta_pair dp = build_deltas(cs);
        poly = source == divisor_source::delta_plus ? dp.delta_plus : dp.delta_minus;
        sign = source == divisor_source::delta_plus ? 1.0 : -1.0;
    }
    if (!divides(cyclotomic(d), poly))
        throw std::invalid_argument(std::string("null_vector_check: Phi_") + std::to_string(d) +
                                    " does not divide " + source_name(source));

    const int n = cs.n;
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<std::complex<double>> v;
    for (int i = 0; i < n; ++i) v.push_back(std::polar(1.0, two_pi * (i % d) / d));
    if (mode == graph_mode::dihedral)
        for (int i = 0; i < n; ++i) v.push_back(sign * std::polar(1.0, -two_pi * (i % d) / d));

    const int_matrix a = build_adjacency_matrix(mode, cs);
    double residual2 = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::complex<double> row{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const bigint& e = a(i, j);
            if (e != 0) row += e.convert_to<double>() * v[j];
        }
        residual2 += std::norm(row);
        norm2 += std::norm(v[i]);
    }
    return std::sqrt(residual2) / std::sqrt(norm2);
}

/// True iff the certificate holds: ||A v|| < rel_tol * ||v||.
inline bool null_vector_check(graph_mode mode, const connecting_set& cs, int d,
                              divisor_source source, double rel_tol = 1e-8) {
    return null_vector_residual(mode, cs, d, source) < rel_tol;
}

struct audit_options {
    bool run_spectrum_split = true;
    bool run_null_vectors = true;
    bool run_jacobi_consistency = true;
    double jacobi_tol = 1e-10;
    double zero_tol = 1e-7;
    double eig_union_tol = 1e-8;
    double null_vector_tol = 1e-8;
};

/// Audit one validated instance: divisibility count, exact rank, agreement,
/// and (per options) the verification gates.
inline audit_record audit_instance(graph_mode mode, const connecting_set& cs,
                                   const audit_options& opt = {}) {
    detail::require_valid(cs, mode);
    audit_record rec;
    rec.mode = mode;
    rec.n = cs.n;
    rec.rotations.assign(cs.rotations.begin(), cs.rotations.end());
    rec.reflections.assign(cs.reflections.begin(), cs.reflections.end());
    rec.paper = paper_nullity(mode, cs);

    const int_matrix a = build_adjacency_matrix(mode, cs);
    rec.oracle = exact_nullity(a);
    rec.agreement = rec.paper.total == rec.oracle.nullity ? agreement_kind::equal
                    : rec.paper.total < rec.oracle.nullity ? agreement_kind::paper_undercounts
                                                           : agreement_kind::violation;

    instance_checks checks;
    bool any_check = false;
    if (mode == graph_mode::dihedral &&
        (opt.run_spectrum_split || rec.agreement != agreement_kind::equal)) {
        const block_adjacency adj = build_block_adjacency(cs);
        auto [plus, minus] = split_blocks(adj);
        const int null_plus = exact_nullity(plus).nullity;
        const int null_minus = exact_nullity(minus).nullity;
        if (rec.agreement != agreement_kind::equal)
            rec.block_nullities = std::make_pair(null_plus, null_minus);
        if (opt.run_spectrum_split) {
            any_check = true;
            checks.spectrum_split_ok =
                spectrum_split_check(adj, opt.eig_union_tol, opt.jacobi_tol);
        }
    }
    if (opt.run_null_vectors) {
        any_check = true;
        for (const auto& hit : rec.paper.contributions)
            if (!null_vector_check(mode, cs, hit.d, hit.source, opt.null_vector_tol))
                checks.null_vectors_ok = false;
    }
    if (opt.run_jacobi_consistency) {
        any_check = true;
        const auto eigs = symmetric_eigenvalues(to_real(a), opt.jacobi_tol);
        checks.jacobi_consistent =
            count_zero_eigenvalues(eigs, opt.zero_tol) == rec.oracle.nullity;
    }
    if (any_check) rec.checks = checks;
    return rec;
}

struct census_spec {
    graph_mode mode = graph_mode::dihedral;
    int n_min = 3;
    int n_max = 6;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::size_t sample_count = 1000;       // sampled mode only
    std::size_t max_instances = 1'000'000; // exhaustive candidate cap
    bool allow_disconnected = false;       // skip the generation axiom
};

namespace detail {

inline connecting_set instance_from_masks(graph_mode mode, int n, std::uint64_t rot_mask,
                                          std::uint64_t ref_mask) {
    connecting_set cs;
    cs.n = n;
    const int slots = n / 2;
    for (int i = 0; i < slots; ++i)
        if (rot_mask >> i & 1) {
            cs.rotations.insert(i + 1);
            cs.rotations.insert(n - (i + 1));
        }
    if (mode == graph_mode::dihedral)
        for (int k = 0; k < n; ++k)
            if (ref_mask >> k & 1) cs.reflections.insert(k);
    return cs;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Deterministic instance list for a census. Exhaustive mode walks n
/// ascending, rotation mask ascending, reflection mask ascending, keeping
/// the connecting sets that validate (generation required unless
/// allow_disconnected). Sampled mode draws uniformly from the same space.
inline std::vector<connecting_set> enumerate_census_instances(const census_spec& spec) {
    if (spec.n_min < 3 || spec.n_max < spec.n_min)
        throw std::invalid_argument("census: need 3 <= n_min <= n_max");
    if (spec.n_max > 62)
        throw std::invalid_argument("census: n_max beyond mask width (62)");
    const bool require_gen = !spec.allow_disconnected;
    std::vector<connecting_set> out;

    if (spec.exhaustive) {
        std::size_t candidates = 0;
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            const std::uint64_t rot_masks = std::uint64_t{1} << (n / 2);
            const std::uint64_t ref_masks =
                spec.mode == graph_mode::dihedral ? (std::uint64_t{1} << n) - 1 : 1;
            candidates += rot_masks * ref_masks;
            if (candidates > spec.max_instances)
                throw std::runtime_error(
                    "census: exhaustive enumeration exceeds the instance cap of " +
                    std::to_string(spec.max_instances) +
                    " candidates; raise --max-instances or sample");
        }
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            const std::uint64_t rot_masks = std::uint64_t{1} << (n / 2);
            for (std::uint64_t rm = 0; rm < rot_masks; ++rm) {
                if (spec.mode == graph_mode::cyclic) {
                    auto cs = detail::instance_from_masks(spec.mode, n, rm, 0);
                    if (validate_connecting_set(cs, spec.mode, require_gen).ok)
                        out.push_back(std::move(cs));
                    continue;
                }
                const std::uint64_t ref_masks = (std::uint64_t{1} << n) - 1;
                for (std::uint64_t fm = 1; fm <= ref_masks; ++fm) {
                    auto cs = detail::instance_from_masks(spec.mode, n, rm, fm);
                    if (validate_connecting_set(cs, spec.mode, require_gen).ok)
                        out.push_back(std::move(cs));
                }
            }
        }
        return out;
    }

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> pick_n(spec.n_min, spec.n_max);
    std::size_t attempts = 0;
    const std::size_t max_attempts = 10'000 * std::max<std::size_t>(spec.sample_count, 1);
    while (out.size() < spec.sample_count) {
        if (++attempts > max_attempts)
            throw std::runtime_error("census: sampling failed to find enough valid instances");
        const int n = pick_n(rng);
        const std::uint64_t rm =
            std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (n / 2)) - 1)(rng);
        std::uint64_t fm = 0;
        if (spec.mode == graph_mode::dihedral)
            fm = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 1)(rng);
        auto cs = detail::instance_from_masks(spec.mode, n, rm, fm);
        if (validate_connecting_set(cs, spec.mode, require_gen).ok) out.push_back(std::move(cs));
    }
    return out;
}

/// Aggregate view of a census run. pp_* rows cover instances whose n is a
/// prime power (the D_{p^s} criterion's home turf); met_singular and
/// balanced_nonsingular are criterion violations and must stay zero.
struct census_summary {
    std::size_t audited = 0;
    std::size_t equal = 0;
    std::size_t undercount = 0;
    std::size_t violation = 0;
    std::size_t singular = 0;
    int min_nullity = 0;
    int max_nullity = 0;
    std::size_t pp_instances = 0;
    std::size_t pp_met = 0;
    std::size_t pp_met_singular = 0;
    std::size_t pp_balanced = 0;
    std::size_t pp_balanced_nonsingular = 0;
    std::size_t failed_spectrum_split = 0;
    std::size_t failed_null_vectors = 0;
    std::size_t failed_jacobi = 0;

    bool clean() const {
        return violation == 0 && pp_met_singular == 0 && pp_balanced_nonsingular == 0 &&
               failed_spectrum_split == 0 && failed_null_vectors == 0 && failed_jacobi == 0;
    }
};

struct census_result {
    std::vector<audit_record> records;
    census_summary summary;
};

inline census_summary summarize(const std::vector<audit_record>& records) {
    census_summary s;
    s.audited = records.size();
    bool first = true;
    for (const auto& rec : records) {
        switch (rec.agreement) {
            case agreement_kind::equal: ++s.equal; break;
            case agreement_kind::paper_undercounts: ++s.undercount; break;
            case agreement_kind::violation: ++s.violation; break;
        }
        if (rec.oracle.nullity > 0) ++s.singular;
        if (first || rec.oracle.nullity < s.min_nullity) s.min_nullity = rec.oracle.nullity;
        if (first || rec.oracle.nullity > s.max_nullity) s.max_nullity = rec.oracle.nullity;
        first = false;

        if (rec.mode == graph_mode::dihedral) {
            if (auto pp = prime_power_decompose(rec.n)) {
                ++s.pp_instances;
                const auto r = static_cast<int>(rec.rotations.size());
                const auto t = static_cast<int>(rec.reflections.size());
                const bool met = r != t && r + t < pp->first;
                const bool balanced = r == t;
                if (met) {
                    ++s.pp_met;
                    if (rec.oracle.nullity > 0) ++s.pp_met_singular;
                }
                if (balanced) {
                    ++s.pp_balanced;
                    if (rec.oracle.nullity == 0) ++s.pp_balanced_nonsingular;
                }
            }
        }
        if (rec.checks) {
            if (!rec.checks->spectrum_split_ok) ++s.failed_spectrum_split;
            if (!rec.checks->null_vectors_ok) ++s.failed_null_vectors;
            if (!rec.checks->jacobi_consistent) ++s.failed_jacobi;
        }
    }
    return s;
}

/// Enumerate, audit (worker pool, deterministic merge order), summarize.
inline census_result run_census(const census_spec& spec, const audit_options& opt = {},
                                unsigned workers = 0) {
    const std::vector<connecting_set> instances = enumerate_census_instances(spec);
    census_result result;
    result.records.resize(instances.size());
    detail::parallel_for(instances.size(), workers, [&](std::size_t i) {
        result.records[i] = audit_instance(spec.mode, instances[i], opt);
    });
    result.summary = summarize(result.records);
    return result;
}

}  // namespace caynull
