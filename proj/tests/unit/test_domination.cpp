#include <gtest/gtest.h>

#include "domlab/domination.hpp"
#include "domlab/families.hpp"
#include "domlab/formulas.hpp"
#include "domlab/witness.hpp"

using namespace domlab;

namespace {

// 1-based convenience, overbarred i written as n+i for prisms.
VertexSet one_based(int host, std::initializer_list<int> members) {
    VertexSet s(host);
    for (int v : members) s.insert(v - 1);
    return s;
}

}  // namespace

TEST(Predicates, Ktds) {
    EXPECT_TRUE(is_ktds(cycle(4), one_based(4, {1, 2}), 1));
    EXPECT_FALSE(is_ktds(complete(4), VertexSet(4, {0, 1}), 2));
    EXPECT_TRUE(is_ktds(cycle(6), VertexSet::all(6), 2));
    EXPECT_FALSE(is_ktds(cycle(6), VertexSet::all(6), 3));
}

TEST(Predicates, Ktrds) {
    EXPECT_TRUE(is_ktrds(cycle(4), one_based(4, {2, 3}), 1));
    EXPECT_TRUE(is_ktrds(complete(5), VertexSet::all(5), 4));
    EXPECT_TRUE(is_ktrds(complement(cycle(6)), one_based(6, {1, 4}), 1));
    // {1,2,4,5} of C6 dominates totally but leaves 3 with no outside neighbour.
    EXPECT_TRUE(is_ktds(cycle(6), one_based(6, {1, 2, 4, 5}), 1));
    EXPECT_FALSE(is_ktrds(cycle(6), one_based(6, {1, 2, 4, 5}), 1));
}

TEST(Predicates, FirstViolationNamesVertexAndCondition) {
    auto v = first_violation(cycle(4), one_based(4, {1}), 1, Variant::restrained);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->vertex, 0);
    EXPECT_EQ(v->condition, "in-set");
    EXPECT_EQ(v->neighbors, 0);
    auto w = first_violation(cycle(6), one_based(6, {1, 2, 4, 5}), 1, Variant::restrained);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->condition, "outside");
    EXPECT_EQ(w->vertex, 2);
    EXPECT_FALSE(first_violation(cycle(4), one_based(4, {2, 3}), 1, Variant::restrained));
}

TEST(Predicates, DomaticPartitions) {
    EXPECT_TRUE(is_ktrdp(complete(4), {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}, 1));
    EXPECT_TRUE(is_ktrdp(cycle(6), {VertexSet::all(6)}, 2));
    EXPECT_TRUE(is_ktrdp(cycle(4), {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}, 1));
    // Overlap and missing vertices are rejected.
    EXPECT_FALSE(is_domatic_partition(complete(4), {VertexSet(4, {0, 1}), VertexSet(4, {1, 2})}, 1, Variant::total));
    EXPECT_FALSE(is_domatic_partition(complete(4), {VertexSet(4, {0, 1}), VertexSet(4, {2})}, 1, Variant::total));
}

TEST(Predicates, RejectsBadInput) {
    EXPECT_THROW(is_ktds(cycle(4), VertexSet(5), 1), std::invalid_argument);
    EXPECT_THROW(parse_variant("both"), std::invalid_argument);
    EXPECT_EQ(parse_variant("total"), Variant::total);
    DominationQuery q{cycle(4), 0, Variant::total};
    EXPECT_THROW(q.validate(), std::invalid_argument);
}

TEST(Witness, CycleSets) {
    EXPECT_EQ(witness_cycle_trds(8).set, one_based(8, {2, 3, 6, 7}));
    EXPECT_EQ(witness_cycle_trds(5).set, one_based(5, {2, 3, 4}));
    EXPECT_EQ(witness_cycle_trds(7).set, one_based(7, {1, 2, 3, 4, 7}));
    const auto check = validate_witness(cycle(8), witness_cycle_trds(8), 1, 4);
    EXPECT_TRUE(check.ok());
    EXPECT_EQ(check.size_match, true);
}

TEST(Witness, ComplementSets) {
    EXPECT_EQ(witness_complement_cycle(9, 2).set, one_based(9, {1, 4, 7}));
    EXPECT_EQ(witness_complement_cycle(7, 2).set, one_based(7, {1, 3, 5, 7}));
    EXPECT_EQ(witness_complement_cycle(6, 2).set, VertexSet::all(6));
    EXPECT_EQ(witness_complement_path(7, 2).set, one_based(7, {1, 4, 7}));
    EXPECT_EQ(witness_complement_path(6, 2).set, VertexSet::all(6));
    EXPECT_EQ(witness_complement_path(5, 1).set.size(), 2);
    EXPECT_TRUE(validate_witness(complement(path(5)), witness_complement_path(5, 1), 1, 2).ok());
    EXPECT_EQ(witness_complement_path(9, 1).set, one_based(9, {1, 9}));
}

TEST(Witness, PrismSets) {
    EXPECT_EQ(witness_prism_path_trds(8).set, one_based(16, {9, 16, 3, 4, 5, 6}));
    EXPECT_EQ(witness_prism_path_trds(6).set, one_based(12, {7, 12, 3, 4}));
    EXPECT_EQ(witness_prism_path_trds(7).set, one_based(14, {8, 13, 14, 3, 4}));
    const Witness p4 = witness_prism_cycle_domatic_pair(4);
    EXPECT_EQ(p4.set, one_based(8, {1, 5, 2, 6}));
    EXPECT_EQ(*p4.partner, one_based(8, {3, 7, 4, 8}));
    const Witness p5 = witness_prism_cycle_domatic_pair(5);
    EXPECT_EQ(p5.set, one_based(10, {1, 6, 4, 9}));
    EXPECT_EQ(*p5.partner, one_based(10, {2, 7, 5, 10}));
    const Witness p7 = witness_prism_cycle_domatic_pair(7);
    EXPECT_EQ(p7.set, one_based(14, {1, 8, 4, 11, 13}));
    EXPECT_EQ(*p7.partner, one_based(14, {2, 9, 5, 12, 14}));
    EXPECT_EQ(p7.to_string(), p7.source + ": {1,4,8,11,13} | {2,5,9,12,14}");
}

TEST(Witness, FailuresAreReportedNotThrown) {
    const Witness bad(one_based(4, {1}), "test");
    const auto check = validate_witness(cycle(4), bad, 1, 1);
    EXPECT_FALSE(check.valid);
    ASSERT_TRUE(check.violation);
    EXPECT_EQ(check.violation->vertex, 0);
    EXPECT_NE(check.describe().find("vertex 1"), std::string::npos);
    // The n = 5 pair misses vertex 5-bar: recorded as data.
    const auto pair = validate_witness(complementary_prism(cycle(5)), witness_prism_cycle_domatic_pair(5), 1, std::nullopt);
    EXPECT_FALSE(pair.valid);
    EXPECT_TRUE(pair.violation);
}

TEST(Witness, CompletedPartitionCoversVertices) {
    const Witness p4 = witness_prism_cycle_domatic_pair(4);
    const auto parts = completed_partition(p4);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].size() + parts[1].size(), 8);
    EXPECT_TRUE(is_domatic_partition(complementary_prism(cycle(4)), parts, 1, Variant::total));
}

class CycleWitness : public ::testing::TestWithParam<int> {};
TEST_P(CycleWitness, MatchesFormula) {
    const int n = GetParam();
    EXPECT_TRUE(validate_witness(cycle(n), witness_cycle_trds(n), 1, f_cycle(n, 1).value()).ok());
    EXPECT_TRUE(validate_witness(complementary_prism(path(n)), witness_prism_path_trds(n), 1, f_prism_path(n).value()).ok())
        << n;
}
INSTANTIATE_TEST_SUITE_P(N4To12, CycleWitness, ::testing::Range(4, 13));
