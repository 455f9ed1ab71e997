#include <caynull/audit.hpp>
#include <caynull/io.hpp>

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>

using namespace caynull;

namespace {

connecting_set instance(int n, std::set<int> rot, std::set<int> ref) {
    return {n, std::move(rot), std::move(ref)};
}

std::size_t count_lines(const std::string& s, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = s.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

// =============================================================================
// Single-instance audits
// =============================================================================

TEST(AuditInstance, CubeAgreesExactly) {
    const auto rec = audit_instance(graph_mode::dihedral, instance(4, {1, 3}, {0}));
    EXPECT_EQ(rec.paper.total, 0);
    EXPECT_EQ(rec.oracle.nullity, 0);
    EXPECT_EQ(rec.oracle.rank, 8);
    EXPECT_EQ(rec.agreement, agreement_kind::equal);
    ASSERT_TRUE(rec.checks.has_value());
    EXPECT_TRUE(rec.checks->all_ok());
    EXPECT_FALSE(rec.block_nullities.has_value());
}

TEST(AuditInstance, RecordedUndercountInstance) {
    const auto rec = audit_instance(graph_mode::dihedral, instance(8, {1, 7}, {0, 2}));
    EXPECT_EQ(rec.paper.total, 6);
    EXPECT_EQ(rec.oracle.nullity, 10);
    EXPECT_EQ(rec.agreement, agreement_kind::paper_undercounts);
    ASSERT_TRUE(rec.block_nullities.has_value());
    EXPECT_EQ(rec.block_nullities->first + rec.block_nullities->second, 10);
    ASSERT_TRUE(rec.checks.has_value());
    EXPECT_TRUE(rec.checks->all_ok());  // undercount is data, not a gate failure
}

TEST(AuditInstance, CyclicInstance) {
    const auto rec = audit_instance(graph_mode::cyclic, instance(4, {1, 3}, {}));
    EXPECT_EQ(rec.mode, graph_mode::cyclic);
    EXPECT_EQ(rec.paper.total, 2);
    EXPECT_EQ(rec.oracle.nullity, 2);
    EXPECT_EQ(rec.agreement, agreement_kind::equal);
}

// =============================================================================
// Kernel-vector certificates
// =============================================================================

TEST(NullVector, DoubleHitInstance) {
    // Phi_4 divides both deltas here; either sign certifies
    const auto cs = instance(4, {1, 3}, {0, 2});
    EXPECT_TRUE(null_vector_check(graph_mode::dihedral, cs, 4, divisor_source::delta_plus));
    EXPECT_TRUE(null_vector_check(graph_mode::dihedral, cs, 4, divisor_source::delta_minus));
    EXPECT_TRUE(null_vector_check(graph_mode::dihedral, cs, 1, divisor_source::delta_minus));
}

TEST(NullVector, BalancedInstanceAtDOne) {
    // v = (1,1,1,-1,-1,-1): row sums of M equal row sums of N
    EXPECT_TRUE(null_vector_check(graph_mode::dihedral, instance(3, {1, 2}, {0, 1}), 1,
                                  divisor_source::delta_minus));
}

TEST(NullVector, SingleDeltaHitBeyondQuadraticRoots) {
    // Phi_3 | delta+ only; the certificate needs the conjugate second block
    EXPECT_TRUE(null_vector_check(graph_mode::dihedral, instance(3, {1, 2}, {0}), 3,
                                  divisor_source::delta_plus));
}

TEST(NullVector, CyclicCertificate) {
    EXPECT_TRUE(null_vector_check(graph_mode::cyclic, instance(4, {1, 3}, {}), 4,
                                  divisor_source::psi_prime));
}

TEST(NullVector, PreconditionViolations) {
    const auto cs = instance(9, {}, {0, 1});  // nonsingular: no hit qualifies
    EXPECT_THROW(null_vector_check(graph_mode::dihedral, cs, 3, divisor_source::delta_plus),
                 std::invalid_argument);
    EXPECT_THROW(null_vector_check(graph_mode::dihedral, cs, 2, divisor_source::delta_plus),
                 std::invalid_argument);  // 2 does not divide 9
    EXPECT_THROW(null_vector_check(graph_mode::cyclic, instance(4, {1, 3}, {}), 4,
                                   divisor_source::delta_plus),
                 std::invalid_argument);  // delta source in cyclic mode
}

// Every hit recorded in a report certifies, across a small exhaustive sweep.
TEST(NullVector, EveryRecordedHitCertifies) {
    census_spec spec;
    spec.mode = graph_mode::dihedral;
    spec.n_min = 3;
    spec.n_max = 6;
    spec.allow_disconnected = true;
    for (const auto& cs : enumerate_census_instances(spec)) {
        const auto report = paper_nullity_dihedral(cs);
        for (const auto& hit : report.contributions)
            ASSERT_TRUE(null_vector_check(graph_mode::dihedral, cs, hit.d, hit.source))
                << "n=" << cs.n << " d=" << hit.d << " src=" << source_name(hit.source);
    }
}

// =============================================================================
// Census enumeration and summaries
// =============================================================================

TEST(Census, ExhaustiveCountsForN3) {
    census_spec spec;
    spec.mode = graph_mode::dihedral;
    spec.n_min = 3;
    spec.n_max = 3;
    // 2 rotation masks x 7 nonempty reflection masks = 14 candidates,
    // 11 of which generate D_3
    EXPECT_EQ(enumerate_census_instances(spec).size(), 11u);
    spec.allow_disconnected = true;
    EXPECT_EQ(enumerate_census_instances(spec).size(), 14u);
}

TEST(Census, SummaryGatesCleanOnSmallCensus) {
    census_spec spec;
    spec.mode = graph_mode::dihedral;
    spec.n_min = 3;
    spec.n_max = 5;
    const auto result = run_census(spec);
    EXPECT_GT(result.summary.audited, 0u);
    EXPECT_EQ(result.summary.violation, 0u);
    EXPECT_EQ(result.summary.audited, result.summary.equal + result.summary.undercount);
    EXPECT_TRUE(result.summary.clean());
    // balanced instances are singular, so some singular instances exist
    EXPECT_GT(result.summary.singular, 0u);
}

TEST(Census, DeterministicAcrossRunsAndWorkerCounts) {
    census_spec spec;
    spec.mode = graph_mode::dihedral;
    spec.n_min = 3;
    spec.n_max = 4;
    const auto a = run_census(spec, {}, 1);
    const auto b = run_census(spec, {}, 4);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        ASSERT_EQ(a.records[i], b.records[i]);
        ASSERT_EQ(to_json(a.records[i]).dump(), to_json(b.records[i]).dump());
    }
}

TEST(Census, SampledModeIsSeedDeterministic) {
    census_spec spec;
    spec.mode = graph_mode::dihedral;
    spec.n_min = 6;
    spec.n_max = 12;
    spec.exhaustive = false;
    spec.sample_count = 40;
    spec.seed = 99;
    const auto a = enumerate_census_instances(spec);
    const auto b = enumerate_census_instances(spec);
    ASSERT_EQ(a.size(), 40u);
    EXPECT_EQ(a, b);
    spec.seed = 100;
    EXPECT_NE(enumerate_census_instances(spec), a);
}

TEST(Census, InstanceCapOverflowNamesTheCap) {
    census_spec spec;
    spec.mode = graph_mode::dihedral;
    spec.n_min = 3;
    spec.n_max = 20;
    spec.max_instances = 1000;
    try {
        enumerate_census_instances(spec);
        FAIL() << "expected overflow error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
    }
}

TEST(Census, CyclicCensusMatchesOracleEverywhere) {
    census_spec spec;
    spec.mode = graph_mode::cyclic;
    spec.n_min = 3;
    spec.n_max = 14;
    const auto result = run_census(spec);
    for (const auto& rec : result.records)
        ASSERT_EQ(rec.agreement, agreement_kind::equal) << "n=" << rec.n;
    EXPECT_TRUE(result.summary.clean());
}

// =============================================================================
// Serialization
// =============================================================================

TEST(Io, JsonSchemaFields) {
    const auto rec = audit_instance(graph_mode::dihedral, instance(4, {1, 3}, {0, 2}));
    const auto j = to_json(rec);
    EXPECT_EQ(j.at("mode"), "dihedral");
    EXPECT_EQ(j.at("n"), 4);
    EXPECT_EQ(j.at("rot"), (std::vector<int>{1, 3}));
    EXPECT_EQ(j.at("ref"), (std::vector<int>{0, 2}));
    EXPECT_EQ(j.at("paper").at("singular"), true);
    EXPECT_EQ(j.at("paper").at("total"), 6);
    EXPECT_EQ(j.at("paper").at("contributions").size(), 4u);
    EXPECT_EQ(j.at("paper").at("contributions")[0].at("source"), "delta_plus");
    EXPECT_EQ(j.at("oracle").at("rank"), 2);
    EXPECT_EQ(j.at("oracle").at("nullity"), 6);
    EXPECT_EQ(j.at("agreement"), "equal");
}

TEST(Io, JsonRoundTrip) {
    for (const auto& cs : {instance(4, {1, 3}, {0}), instance(8, {1, 7}, {0, 2})}) {
        const auto rec = audit_instance(graph_mode::dihedral, cs);
        EXPECT_EQ(audit_record_from_json(to_json(rec)), rec);
    }
    const auto cyclic = audit_instance(graph_mode::cyclic, instance(5, {1, 4}, {}));
    EXPECT_EQ(audit_record_from_json(to_json(cyclic)), cyclic);
}

TEST(Io, CsvRow) {
    EXPECT_EQ(csv_header(), "mode,n,rot,ref,paper_total,oracle_nullity,agreement");
    const auto rec = audit_instance(graph_mode::dihedral, instance(8, {1, 7}, {0, 2}));
    EXPECT_EQ(to_csv_row(rec), "dihedral,8,1;7,0;2,6,10,paper_undercounts");
}

TEST(Io, DotExportEdgeCounts) {
    // 3-cube: 8 vertices of degree 3 -> 12 edges
    std::ostringstream cube;
    write_dot(cube, graph_mode::dihedral, instance(4, {1, 3}, {0}));
    EXPECT_EQ(count_lines(cube.str(), "[label="), 8u);
    EXPECT_EQ(count_lines(cube.str(), " -- "), 12u);
    EXPECT_NE(cube.str().find("r0 [label=\"a^0\"]"), std::string::npos);
    EXPECT_NE(cube.str().find("f0 [label=\"a^0 b\"]"), std::string::npos);

    // K_{3,3}: 6 vertices, 9 edges
    std::ostringstream k33;
    write_dot(k33, graph_mode::dihedral, instance(3, {}, {0, 1, 2}));
    EXPECT_EQ(count_lines(k33.str(), "[label="), 6u);
    EXPECT_EQ(count_lines(k33.str(), " -- "), 9u);

    // cyclic export has no reflection vertices
    std::ostringstream cyc;
    write_dot(cyc, graph_mode::cyclic, instance(5, {1, 4}, {}));
    EXPECT_EQ(count_lines(cyc.str(), "[label="), 5u);
    EXPECT_EQ(count_lines(cyc.str(), " -- "), 5u);
    EXPECT_EQ(cyc.str().find("f0"), std::string::npos);
}
