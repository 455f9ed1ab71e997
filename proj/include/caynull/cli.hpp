#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Subcommands: analyze, census, audit, null-vector-check, export.
 * Instances are given as --mode cyclic|dihedral --n N --rot k1,k2,...
 * --ref k1,k2,... (the rotation list may be empty only in dihedral mode).
 *
 * Exit codes: 0 ok, 1 parse/usage error, 2 invalid connecting set,
 * 3 I/O error, 4 audit violation.
 */

#include <caynull/audit.hpp>
#include <caynull/io.hpp>
#include <caynull/nullity.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace caynull {

namespace cli_detail {

constexpr int exit_ok = 0;
constexpr int exit_parse = 1;
constexpr int exit_invalid_set = 2;
constexpr int exit_io = 3;
constexpr int exit_violation = 4;

struct instance_flags {
    std::string mode = "dihedral";
    int n = 0;
    std::vector<int> rot;
    std::vector<int> ref;

    graph_mode parsed_mode() const {
        return mode == "cyclic" ? graph_mode::cyclic : graph_mode::dihedral;
    }
    connecting_set to_set() const {
        return {n, std::set<int>(rot.begin(), rot.end()), std::set<int>(ref.begin(), ref.end())};
    }
};

inline void add_instance_flags(CLI::App* cmd, instance_flags& f) {
    cmd->add_option("--mode", f.mode, "cyclic or dihedral")
        ->check(CLI::IsMember({"cyclic", "dihedral"}))
        ->required();
    cmd->add_option("--n", f.n, "group parameter n (>= 3)")->required();
    cmd->add_option("--rot", f.rot, "rotation exponents, comma separated")->delimiter(',');
    cmd->add_option("--ref", f.ref, "reflection exponents, comma separated")->delimiter(',');
}

struct census_flags {
    std::string mode = "dihedral";
    int n_min = 3;
    int n_max = 0;
    bool force_exhaustive = false;
    bool force_sample = false;
    std::size_t samples = 1000;
    std::string out_path;
};

inline void add_census_flags(CLI::App* cmd, census_flags& f) {
    cmd->add_option("--mode", f.mode, "cyclic or dihedral")
        ->check(CLI::IsMember({"cyclic", "dihedral"}))
        ->required();
    cmd->add_option("--n-min", f.n_min, "smallest n (default 3)");
    cmd->add_option("--n-max", f.n_max, "largest n")->required();
    cmd->add_flag("--exhaustive", f.force_exhaustive, "force exhaustive enumeration");
    cmd->add_flag("--sample", f.force_sample, "force seeded sampling");
    cmd->add_option("--samples", f.samples, "sample count in sampled mode (default 1000)");
    cmd->add_option("--out", f.out_path, "write records to this file instead of stdout");
}

/// Default policy: exhaustive up to dihedral n <= 10 / cyclic n <= 24,
/// seeded sampling beyond (instance counts grow like 2^{n/2} * 2^n).
inline bool default_exhaustive(graph_mode mode, int n_max) {
    return mode == graph_mode::dihedral ? n_max <= 10 : n_max <= 24;
}

inline int validate_or_report(const connecting_set& cs, graph_mode mode, bool require_generation,
                              std::ostream& err) {
    const auto v = validate_connecting_set(cs, mode, require_generation);
    if (v.ok) return exit_ok;
    err << "invalid connecting set (axiom " << axiom_name(v.violated) << "): " << v.detail
        << "\n";
    return exit_invalid_set;
}

inline std::string format_set(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

inline void print_human_analysis(std::ostream& out, graph_mode mode, const connecting_set& cs,
                                 const audit_record& rec) {
    out << "instance: " << mode_name(mode) << " n=" << cs.n << " R=" << format_set(rec.rotations)
        << " S=" << format_set(rec.reflections) << "\n";

    if (mode == graph_mode::dihedral) {
        const delta_pair dp = build_deltas(cs);
        out << "polynomials:\n";
        out << "  psi'   = " << to_string(dp.psi_prime) << "\n";
        out << "  psi''  = " << to_string(dp.psi_double_prime) << "\n";
        out << "  delta+ = " << to_string(dp.delta_plus) << "\n";
        out << "  delta- = " << to_string(dp.delta_minus) << "\n";
        out << "divisor table:\n";
        bool double_hit = false;
        for (int d : divisors(cs.n)) {
            const bool plus = divides(cyclotomic(d), dp.delta_plus);
            const bool minus = divides(cyclotomic(d), dp.delta_minus);
            double_hit = double_hit || (plus && minus);
            out << "  d=" << d << " phi=" << totient(d) << "  Phi_d | delta+: "
                << (plus ? "yes" : "no ") << "  Phi_d | delta-: " << (minus ? "yes" : "no")
                << "\n";
        }
        if (double_hit)
            out << "note: some d divides both deltas; phi(d) is counted once per delta"
                   " (the block-additive reading)\n";
    } else {
        const auto psi = int_polynomial::from_exponents(cs.rotations);
        out << "polynomials:\n  psi' = " << to_string(psi) << "\n";
        out << "divisor table:\n";
        for (int d : divisors(cs.n))
            out << "  d=" << d << " phi=" << totient(d) << "  Phi_d | psi': "
                << (divides(cyclotomic(d), psi) ? "yes" : "no") << "\n";
        out << "eigenvalues (psi' at n-th roots of unity, index order):\n";
        const auto eigs = circulant_eigenvalues(circulant_matrix(build_cyclic_adjacency(cs.n, cs.rotations)));
        out << std::fixed << std::setprecision(6);
        for (std::size_t j = 0; j < eigs.size(); ++j)
            out << "  j=" << j << ": " << eigs[j].real() << (eigs[j].imag() < 0 ? " - " : " + ")
                << std::abs(eigs[j].imag()) << "i\n";
        out.unsetf(std::ios::fixed);
        out << std::setprecision(6);
    }

    out << "paper nullity: " << rec.paper.total << " ("
        << (rec.paper.singular ? "singular" : "nonsingular") << ")";
    if (!rec.paper.contributions.empty()) {
        out << "  contributions:";
        for (const auto& c : rec.paper.contributions)
            out << " (d=" << c.d << "," << source_name(c.source) << ",phi=" << c.phi << ")";
    }
    out << "\n";
    out << "oracle: rank " << rec.oracle.rank << ", nullity " << rec.oracle.nullity << "\n";
    if (rec.block_nullities)
        out << "witness: null(M+N)=" << rec.block_nullities->first
            << " null(M-N)=" << rec.block_nullities->second << "\n";
    out << "agreement: " << agreement_name(rec.agreement) << "\n";
    if (rec.checks)
        out << "checks: spectrum_split " << (rec.checks->spectrum_split_ok ? "ok" : "FAIL")
            << ", null_vectors " << (rec.checks->null_vectors_ok ? "ok" : "FAIL")
            << ", jacobi_consistency " << (rec.checks->jacobi_consistent ? "ok" : "FAIL") << "\n";
}

inline void print_summary_human(std::ostream& out, const census_summary& s) {
    out << "# audited " << s.audited << " instances: " << s.equal << " equal, " << s.undercount
        << " undercount, " << s.violation << " violation\n";
    out << "# oracle nullity range [" << s.min_nullity << ", " << s.max_nullity << "]; "
        << s.singular << " singular\n";
    out << "# gates: spectrum_split " << s.failed_spectrum_split << " failures, null_vectors "
        << s.failed_null_vectors << " failures, jacobi " << s.failed_jacobi << " failures\n";
    out << "# prime-power n: " << s.pp_instances << " instances, " << s.pp_met
        << " criterion-met (" << s.pp_met_singular << " singular), " << s.pp_balanced
        << " balanced (" << s.pp_balanced_nonsingular << " nonsingular)\n";
}

inline ordered_json summary_to_json(const census_summary& s) {
    ordered_json j;
    j["audited"] = s.audited;
    j["equal"] = s.equal;
    j["undercount"] = s.undercount;
    j["violation"] = s.violation;
    j["singular"] = s.singular;
    j["min_nullity"] = s.min_nullity;
    j["max_nullity"] = s.max_nullity;
    j["prime_power"] = ordered_json{{"instances", s.pp_instances},
                                    {"criterion_met", s.pp_met},
                                    {"criterion_met_singular", s.pp_met_singular},
                                    {"balanced", s.pp_balanced},
                                    {"balanced_nonsingular", s.pp_balanced_nonsingular}};
    j["gate_failures"] = ordered_json{{"spectrum_split", s.failed_spectrum_split},
                                      {"null_vectors", s.failed_null_vectors},
                                      {"jacobi", s.failed_jacobi}};
    return j;
}

}  // namespace cli_detail

/// Parse and run. Returns the process exit code; output goes to the given
/// streams so tests can capture it.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"exact singularity and nullity analysis for Cayley graphs over "
                 "cyclic and dihedral groups"};
    app.name("caynull");
    app.require_subcommand(1);

    bool json_output = false;
    std::uint64_t seed = 0;
    bool allow_disconnected = false;
    std::size_t max_instances = 1'000'000;
    app.add_flag("--json", json_output, "machine-readable output")->configurable(false);
    app.add_option("--seed", seed, "RNG seed for sampled censuses (default 0)");
    app.add_flag("--allow-disconnected", allow_disconnected,
                 "skip the generation axiom (include disconnected graphs)");
    app.add_option("--max-instances", max_instances,
                   "cap on exhaustive census candidates (default 1000000)");

    instance_flags analyze_flags, nvc_flags, export_flags;
    census_flags census_opts, audit_opts;
    int nvc_d = 1;
    std::string nvc_source = "delta_plus";
    std::string export_format = "dot";
    std::string export_out;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a single instance");
    add_instance_flags(analyze, analyze_flags);

    CLI::App* census = app.add_subcommand("census", "enumerate and audit a family of instances");
    add_census_flags(census, census_opts);

    CLI::App* audit = app.add_subcommand("audit", "run the verification gates over a census");
    add_census_flags(audit, audit_opts);

    CLI::App* nvc = app.add_subcommand("null-vector-check",
                                       "verify the kernel-vector certificate of one hit");
    add_instance_flags(nvc, nvc_flags);
    nvc->add_option("--d", nvc_d, "divisor d of n")->required();
    nvc->add_option("--source", nvc_source, "psi_prime, delta_plus or delta_minus")
        ->check(CLI::IsMember({"psi_prime", "delta_plus", "delta_minus"}))
        ->required();

    CLI::App* exporter = app.add_subcommand("export", "write the instance as dot/json/csv");
    add_instance_flags(exporter, export_flags);
    exporter->add_option("--format", export_format, "dot, json or csv")
        ->check(CLI::IsMember({"dot", "json", "csv"}))
        ->required();
    exporter->add_option("--out", export_out, "output file (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    auto run_census_command = [&](const census_flags& f, bool verification_view) -> int {
        census_spec spec;
        spec.mode = f.mode == "cyclic" ? graph_mode::cyclic : graph_mode::dihedral;
        spec.n_min = f.n_min;
        spec.n_max = f.n_max;
        spec.seed = seed;
        spec.sample_count = f.samples;
        spec.max_instances = max_instances;
        spec.allow_disconnected = allow_disconnected;
        spec.exhaustive = f.force_exhaustive ||
                          (!f.force_sample && default_exhaustive(spec.mode, spec.n_max));
        census_result result;
        try {
            result = run_census(spec);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return exit_parse;
        }

        if (verification_view) {
            if (json_output) {
                ordered_json j = summary_to_json(result.summary);
                j["verdict"] = result.summary.clean() ? "pass" : "fail";
                out << j.dump(2) << "\n";
            } else {
                out << "audit: " << mode_name(spec.mode) << " n in [" << spec.n_min << ","
                    << spec.n_max << "], " << (spec.exhaustive ? "exhaustive" : "sampled")
                    << "\n";
                print_summary_human(out, result.summary);
                out << "verdict: " << (result.summary.clean() ? "PASS" : "FAIL") << "\n";
            }
        } else {
            std::ofstream file;
            std::ostream* records_out = &out;
            if (!f.out_path.empty()) {
                file.open(f.out_path);
                if (!file) {
                    err << "error: cannot open " << f.out_path << " for writing\n";
                    return exit_io;
                }
                records_out = &file;
            }
            if (json_output) {
                for (const auto& rec : result.records) *records_out << to_json(rec).dump() << "\n";
                out << ordered_json{{"summary", summary_to_json(result.summary)}}.dump(2) << "\n";
            } else {
                *records_out << csv_header() << "\n";
                for (const auto& rec : result.records) *records_out << to_csv_row(rec) << "\n";
                print_summary_human(out, result.summary);
            }
            if (!f.out_path.empty() && !file.good()) {
                err << "error: write to " << f.out_path << " failed\n";
                return exit_io;
            }
        }
        if (!result.summary.clean()) {
            err << "audit violation: paper total exceeded the oracle nullity or a gate failed\n";
            return exit_violation;
        }
        return exit_ok;
    };

    if (*analyze) {
        const auto mode = analyze_flags.parsed_mode();
        const auto cs = analyze_flags.to_set();
        if (int rc = validate_or_report(cs, mode, !allow_disconnected, err)) return rc;
        const audit_record rec = audit_instance(mode, cs);
        if (json_output) out << to_json(rec).dump(2) << "\n";
        else print_human_analysis(out, mode, cs, rec);
        return exit_ok;
    }
    if (*census) return run_census_command(census_opts, /*verification_view=*/false);
    if (*audit) return run_census_command(audit_opts, /*verification_view=*/true);
    if (*nvc) {
        const auto mode = nvc_flags.parsed_mode();
        const auto cs = nvc_flags.to_set();
        if (int rc = validate_or_report(cs, mode, !allow_disconnected, err)) return rc;
        double residual = 0.0;
        try {
            residual = null_vector_residual(mode, cs, nvc_d, source_from_name(nvc_source));
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return exit_parse;
        }
        const bool pass = residual < 1e-8;
        out << "relative residual |A v| / |v| = " << std::scientific << std::setprecision(3)
            << residual << (pass ? "  PASS" : "  FAIL") << "\n";
        return pass ? exit_ok : exit_violation;
    }
    if (*exporter) {
        const auto mode = export_flags.parsed_mode();
        const auto cs = export_flags.to_set();
        if (int rc = validate_or_report(cs, mode, !allow_disconnected, err)) return rc;
        std::ofstream file;
        std::ostream* dest = &out;
        if (!export_out.empty()) {
            file.open(export_out);
            if (!file) {
                err << "error: cannot open " << export_out << " for writing\n";
                return exit_io;
            }
            dest = &file;
        }
        if (export_format == "dot") {
            write_dot(*dest, mode, cs);
        } else {
            const audit_record rec = audit_instance(mode, cs);
            if (export_format == "json") *dest << to_json(rec).dump(2) << "\n";
            else *dest << csv_header() << "\n" << to_csv_row(rec) << "\n";
        }
        if (!export_out.empty() && !file.good()) {
            err << "error: write to " << export_out << " failed\n";
            return exit_io;
        }
        return exit_ok;
    }
    return exit_parse;  // unreachable with require_subcommand(1)
}

}  // namespace caynull
