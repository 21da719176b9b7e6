#include <gtest/gtest.h>

#include "domlab/families.hpp"
#include "domlab/formulas.hpp"
#include "domlab/solver.hpp"

using namespace domlab;

TEST(Formulas, CompleteGraphs) {
    EXPECT_EQ(f_complete(6, 2).value(), 3);
    EXPECT_EQ(f_complete(5, 2).value(), 5);
    EXPECT_EQ(f_complete(2, 1).value(), 2);
    EXPECT_FALSE(f_complete(3, 3).applicable);
}

TEST(Formulas, Complements) {
    EXPECT_EQ(f_complement_cycle(9, 2).value(), 3);
    EXPECT_EQ(f_complement_cycle(7, 2).value(), 4);
    EXPECT_EQ(f_complement_cycle(6, 2).value(), 6);
    EXPECT_EQ(f_complement_path(5, 1).value(), 2);
    EXPECT_EQ(f_complement_path(4, 1).value(), 4);
    EXPECT_EQ(f_complement_path(7, 2).value(), 3);
    EXPECT_FALSE(f_complement_path(4, 2).applicable);
}

TEST(Formulas, Cycles) {
    EXPECT_EQ(f_cycle(7, 1).value(), 5);
    EXPECT_EQ(f_cycle(5, 1).value(), 3);
    EXPECT_EQ(f_cycle(8, 1).value(), 4);
    EXPECT_EQ(f_cycle(6, 2).value(), 6);
    EXPECT_FALSE(f_cycle(6, 3).applicable);
}

TEST(Formulas, Bipartite) {
    EXPECT_EQ(f_complete_bipartite(3, 3, 1).value(), 2);
    EXPECT_EQ(f_complete_bipartite(2, 2, 2).value(), 4);
    EXPECT_EQ(f_complete_bipartite(4, 4, 2).value(), 4);
    EXPECT_EQ(f_complete_bipartite(3, 5, 2).value(), 8);
    EXPECT_EQ(f_bipartite_bounds(8, 2).to_string(), "[4,8]");
}

TEST(Formulas, MultipartiteIntervals) {
    const PartitionSpec oct{{2, 2, 2}};
    EXPECT_EQ(f_multipartite_bounds(oct, 1, std::nullopt, std::nullopt).to_string(), "[2,5]");
    EXPECT_EQ(f_multipartite_bounds(oct, 1, 2, std::nullopt).to_string(), "[2,4]");
    EXPECT_EQ(f_multipartite_bounds(oct, 1, 3, std::nullopt).to_string(), "[2,4]");
    EXPECT_FALSE(f_multipartite_bounds({{1, 1, 1}}, 1, std::nullopt, 3).applicable);
    EXPECT_FALSE(f_multipartite_bounds({{3, 3}}, 1, std::nullopt, std::nullopt).applicable);
    const auto t0 = t0_exact(oct, 1);
    const auto refined = f_multipartite_bounds(oct, 1, t0.t0, t0.gamma);
    EXPECT_TRUE(refined.admits(t0.gamma));
}

TEST(Formulas, LowerBoundFromEdges) {
    EXPECT_EQ(f_lower_edges(5, 5, 1).to_string(), ">=3");
    EXPECT_EQ(f_lower_edges(4, 6, 2).to_string(), ">=3");
    EXPECT_EQ(f_lower_edges(8, 8, 1).to_string(), ">=4");
    EXPECT_NE(f_lower_edges(5, 5, 1).reason.find("5/2"), std::string::npos);
}

TEST(Formulas, DomaticValuesAndCaps) {
    EXPECT_EQ(f_domatic_complete(6, 1).value(), 3);
    EXPECT_EQ(f_domatic_complete(4, 3).value(), 1);
    EXPECT_EQ(f_domatic_caps(6, 1, false).to_string(), "<=3");
    EXPECT_EQ(f_domatic_caps(6, 1, true).to_string(), "<=3");
    EXPECT_EQ(f_domatic_caps(8, 2, true).to_string(), "<=2");
}

TEST(Formulas, Prisms) {
    EXPECT_EQ(f_prism_cycle(8, 1).value(), 6);
    EXPECT_EQ(f_prism_cycle(5, 2).value(), 10);
    EXPECT_EQ(f_prism_cycle(6, 2).value(), 8);
    EXPECT_EQ(f_prism_path(8).value(), 6);
    EXPECT_EQ(f_prism_path(7).value(), 5);
    EXPECT_EQ(f_prism_path(6).value(), 4);
    EXPECT_EQ(f_prism_regular_lb(6, 2, 2).to_string(), ">=8");
    EXPECT_EQ(f_prism_regular_lb(5, 2, 2).to_string(), "10");
    EXPECT_FALSE(f_prism_regular_lb(6, 2, 1).applicable);
    EXPECT_EQ(f_prelemma_prisms(8, PrismOracle::total_cycle).value(), 6);
    EXPECT_EQ(f_prelemma_prisms(6, PrismOracle::double_total_cycle).value(), 8);
    EXPECT_EQ(f_prelemma_prisms(7, PrismOracle::total_path).value(), 5);
}

TEST(Formulas, SandwichOnC6) {
    const auto v = f_prism_sandwich(2, 4, 2, 6, 6);
    EXPECT_EQ(v.to_string(), "[6,12]");
    EXPECT_TRUE(v.admits(8));
    EXPECT_EQ(f_prism_sandwich(1, std::nullopt, std::nullopt, 3, 2).kind, VerdictKind::upper_bound);
}

TEST(Formulas, KJoin) {
    EXPECT_EQ(f_kjoin_gamma(2, 1).value(), 2);
    EXPECT_EQ(f_kjoin_gamma(3, 2).value(), 3);
    const Graph j = k_join(cycle(4), complete(2), 1);
    EXPECT_EQ(gamma_exact({j, 1, Variant::restrained}).value, 2);
    const Graph j2 = k_join(complete(3), complete(3), 2);
    EXPECT_EQ(gamma_exact({j2, 2, Variant::restrained}).value, 3);
}

TEST(Formulas, VerdictText) {
    EXPECT_EQ(FormulaVerdict::exact(5, "").to_string(), "5");
    EXPECT_EQ(FormulaVerdict::at_least(3, "").to_string(), ">=3");
    EXPECT_EQ(FormulaVerdict::at_most(4, "").to_string(), "<=4");
    EXPECT_EQ(FormulaVerdict::between(2, 5, "").to_string(), "[2,5]");
    EXPECT_EQ(FormulaVerdict::inapplicable("x").to_string(), "n/a");
    EXPECT_THROW(FormulaVerdict::inapplicable("x").value(), std::logic_error);
    EXPECT_THROW(FormulaVerdict::between(3, 2, ""), std::logic_error);
}
