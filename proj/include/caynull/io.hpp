#pragma once

/// @file io.hpp
/// @brief Audit record serialization (JSON, CSV) and graph export (DOT).
///
/// The JSON schema is stable:
///   {mode, n, rot:[int], ref:[int],
///    paper:{singular, total, contributions:[{d, source, phi}]},
///    oracle:{rank, nullity}, agreement}
/// plus optional "witness" (block nullities on disagreement) and "checks"
/// objects. Ordered JSON keeps emission byte-deterministic.

#include <caynull/adjacency.hpp>
#include <caynull/audit.hpp>

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace caynull {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const audit_record& rec) {
    ordered_json j;
    j["mode"] = mode_name(rec.mode);
    j["n"] = rec.n;
    j["rot"] = rec.rotations;
    j["ref"] = rec.reflections;
    ordered_json paper;
    paper["singular"] = rec.paper.singular;
    paper["total"] = rec.paper.total;
    ordered_json contribs = ordered_json::array();
    for (const auto& c : rec.paper.contributions) {
        ordered_json e;
        e["d"] = c.d;
        e["source"] = source_name(c.source);
        e["phi"] = c.phi;
        contribs.push_back(std::move(e));
    }
    paper["contributions"] = std::move(contribs);
    j["paper"] = std::move(paper);
    j["oracle"] = ordered_json{{"rank", rec.oracle.rank}, {"nullity", rec.oracle.nullity}};
    j["agreement"] = agreement_name(rec.agreement);
    if (rec.block_nullities) {
        j["witness"] = ordered_json{{"null_m_plus_n", rec.block_nullities->first},
                                    {"null_m_minus_n", rec.block_nullities->second}};
    }
    if (rec.checks) {
        j["checks"] = ordered_json{{"spectrum_split_ok", rec.checks->spectrum_split_ok},
                                   {"null_vectors_ok", rec.checks->null_vectors_ok},
                                   {"jacobi_consistent", rec.checks->jacobi_consistent}};
    }
    return j;
}

inline audit_record audit_record_from_json(const ordered_json& j) {
    audit_record rec;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "cyclic") rec.mode = graph_mode::cyclic;
    else if (mode == "dihedral") rec.mode = graph_mode::dihedral;
    else throw std::invalid_argument("audit_record_from_json: unknown mode " + mode);
    rec.n = j.at("n").get<int>();
    rec.rotations = j.at("rot").get<std::vector<int>>();
    rec.reflections = j.at("ref").get<std::vector<int>>();
    const auto& paper = j.at("paper");
    rec.paper.singular = paper.at("singular").get<bool>();
    rec.paper.total = paper.at("total").get<int>();
    for (const auto& e : paper.at("contributions"))
        rec.paper.contributions.push_back({e.at("d").get<int>(),
                                           source_from_name(e.at("source").get<std::string>()),
                                           e.at("phi").get<int>()});
    const auto& oracle = j.at("oracle");
    rec.oracle.rank = oracle.at("rank").get<int>();
    rec.oracle.nullity = oracle.at("nullity").get<int>();
    rec.oracle.dimension = rec.oracle.rank + rec.oracle.nullity;
    rec.agreement = agreement_from_name(j.at("agreement").get<std::string>());
    if (j.contains("witness"))
        rec.block_nullities = std::make_pair(j["witness"].at("null_m_plus_n").get<int>(),
                                             j["witness"].at("null_m_minus_n").get<int>());
    if (j.contains("checks")) {
        instance_checks c;
        c.spectrum_split_ok = j["checks"].at("spectrum_split_ok").get<bool>();
        c.null_vectors_ok = j["checks"].at("null_vectors_ok").get<bool>();
        c.jacobi_consistent = j["checks"].at("jacobi_consistent").get<bool>();
        rec.checks = c;
    }
    return rec;
}

namespace detail {

inline std::string join_semicolon(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace detail

inline std::string csv_header() {
    return "mode,n,rot,ref,paper_total,oracle_nullity,agreement";
}

inline std::string to_csv_row(const audit_record& rec) {
    std::ostringstream out;
    out << mode_name(rec.mode) << ',' << rec.n << ',' << detail::join_semicolon(rec.rotations)
        << ',' << detail::join_semicolon(rec.reflections) << ',' << rec.paper.total << ','
        << rec.oracle.nullity << ',' << agreement_name(rec.agreement);
    return out.str();
}

/// Undirected DOT graph. Rotation vertices r0..r{n-1} (labels a^k),
/// reflection vertices f0..f{n-1} (labels a^k b, dihedral mode only);
/// each edge emitted once.
inline void write_dot(std::ostream& out, graph_mode mode, const connecting_set& cs) {
    detail::require_valid(cs, mode);
    const int_matrix a = build_adjacency_matrix(mode, cs);
    const int n = cs.n;
    auto vertex = [n](std::size_t i) {
        return i < static_cast<std::size_t>(n) ? "r" + std::to_string(i)
                                               : "f" + std::to_string(i - static_cast<std::size_t>(n));
    };
    out << "graph cayley {\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto k = i % static_cast<std::size_t>(n);
        out << "  " << vertex(i) << " [label=\"a^" << k
            << (i < static_cast<std::size_t>(n) ? "" : " b") << "\"];\n";
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != 0) out << "  " << vertex(i) << " -- " << vertex(j) << ";\n";
    out << "}\n";
}

}  // namespace caynull
