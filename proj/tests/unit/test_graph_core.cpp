#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "domlab/edge_list.hpp"
#include "domlab/families.hpp"
#include "domlab/family_spec.hpp"
#include "domlab/isomorphism.hpp"

using namespace domlab;

namespace {

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, e);
}

int girth(const Graph& g) {
    int best = 1 << 20;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1), parent(dist);
        std::vector<Vertex> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            for (Vertex u : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    queue.push_back(u);
                } else if (parent[static_cast<std::size_t>(v)] != u) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet s(70, {0, 5, 69});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(69));
    EXPECT_FALSE(s.contains(68));
    s.erase(5);
    EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 69}));
    EXPECT_EQ(s.to_string_one_based(), "{1,70}");
    EXPECT_EQ(s.complement().size(), 68);
    EXPECT_THROW(s.insert(70), std::out_of_range);
    EXPECT_THROW(s.contains(-1), std::out_of_range);
}

TEST(VertexSet, SetAlgebraAndOrder) {
    VertexSet a(6, {0, 1, 2});
    VertexSet b(6, {2, 3});
    EXPECT_EQ((a | b).members(), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ((a & b).members(), (std::vector<Vertex>{2}));
    EXPECT_EQ((a - b).members(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(a.intersection_size(b), 1);
    EXPECT_TRUE(VertexSet(6, {1}).is_subset_of(a));
    EXPECT_TRUE(lex_less(VertexSet(6, {0, 3}), VertexSet(6, {1, 2})));
    EXPECT_FALSE(lex_less(a, a));
    EXPECT_EQ(VertexSet::from_mask(6, 0b101).members(), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(VertexSet::all(6).mask(), 0b111111u);
    EXPECT_THROW(a |= VertexSet(7), std::invalid_argument);
}

TEST(BuildGraph, Triangle) {
    Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(g.size(), 3u);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(BuildGraph, EdgelessAndDuplicates) {
    Graph e = build_graph(4, {});
    EXPECT_EQ(e.min_degree(), 0);
    EXPECT_EQ(e.size(), 0u);
    Graph d = build_graph(4, {{0, 1}, {1, 0}});
    EXPECT_EQ(d.size(), 1u);
}

TEST(BuildGraph, RejectsBadEdgesNamingThePair) {
    try {
        build_graph(3, {{0, 3}});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("(0,3)"), std::string::npos);
    }
    try {
        build_graph(3, {{1, 1}});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos);
    }
}

TEST(BuildGraph, InducedSubgraph) {
    Graph c = cycle(6);
    Graph p = c.induced({0, 1, 2, 3});
    EXPECT_TRUE(p == path(4));
    EXPECT_EQ(p.label(0), "1");
}

TEST(Families, Generators) {
    EXPECT_TRUE(cycle(4).is_regular());
    EXPECT_EQ(cycle(4).size(), 4u);
    EXPECT_THROW(cycle(2), std::invalid_argument);
    Graph oct = complete_multipartite({{2, 2, 2}});
    EXPECT_EQ(oct.order(), 6);
    EXPECT_TRUE(oct.is_regular());
    EXPECT_EQ(oct.min_degree(), 4);
    Graph k33 = complete_bipartite(3, 3);
    EXPECT_EQ(k33.size(), 9u);
    EXPECT_EQ(k33.min_degree(), 3);
    EXPECT_TRUE(is_bipartite(k33));
    EXPECT_FALSE(is_bipartite(cycle(5)));
    EXPECT_EQ(path(5).size(), 4u);
    EXPECT_EQ(complete(5).size(), 10u);
}

TEST(Families, Complements) {
    EXPECT_EQ(complement(complete(5)).size(), 0u);
    Graph c5 = complement(cycle(5));
    EXPECT_EQ(c5.size(), 5u);
    EXPECT_TRUE(c5.is_regular());
    EXPECT_TRUE(is_isomorphic(c5, cycle(5)));
    // Two triangles {1,3,5}, {2,4,6} plus the matching i -- i+3 (1-based).
    Graph c6 = complement(cycle(6));
    EXPECT_TRUE(c6.is_regular());
    EXPECT_EQ(c6.min_degree(), 3);
    for (auto [u, v] : std::vector<Edge>{{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}, {0, 3}, {1, 4}, {2, 5}}) {
        EXPECT_TRUE(c6.adjacent(u, v)) << u << "," << v;
    }
}

TEST(Families, CartesianProductMatchesDefinition) {
    Graph g = path(3);
    Graph h = cycle(4);
    Graph p = cartesian_product(g, h);
    ASSERT_EQ(p.order(), 12);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 4; ++d) {
                    const bool expected = (a == c && h.adjacent(b, d)) || (b == d && g.adjacent(a, c));
                    EXPECT_EQ(p.adjacent(a * 4 + b, c * 4 + d), expected);
                }
    EXPECT_TRUE(is_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4)));
}

TEST(Families, ComplementaryProductSpecialCases) {
    Graph g = cycle(5);
    Graph h = complete(2);
    Graph full = complementary_product(g, h, {VertexSet::all(5), VertexSet::all(2)});
    EXPECT_TRUE(full == cartesian_product(g, h));
    Graph pet = complementary_product(g, h, {VertexSet::all(5), VertexSet(2, {0})});
    EXPECT_EQ(pet.order(), 10);
    EXPECT_TRUE(pet.is_regular());
    EXPECT_EQ(pet.min_degree(), 3);
    EXPECT_EQ(girth(pet), 5);
    EXPECT_TRUE(is_isomorphic(pet, petersen()));
}

TEST(Families, ComplementaryPrism) {
    Graph p5 = complementary_prism(cycle(5));
    EXPECT_TRUE(is_isomorphic(p5, petersen()));
    EXPECT_TRUE(is_isomorphic(complementary_prism(complete(3)), corona_k1(complete(3))));
    Graph p4 = complementary_prism(cycle(4));
    ASSERT_EQ(p4.order(), 8);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(p4.degree(v), 3);
    for (Vertex v = 4; v < 8; ++v) EXPECT_EQ(p4.degree(v), 2);
    EXPECT_EQ(p4.label(4), "1̄");
}

TEST(Families, CoronaAndKJoin) {
    EXPECT_TRUE(corona_k1(complete(1)) == complete(2));
    Graph c = corona_k1(cycle(4));
    EXPECT_EQ(c.order(), 8);
    EXPECT_EQ(c.size(), 8u);

    Graph j = k_join(cycle(4), complete(2), 1);
    for (Vertex v = 0; v < 4; ++v) {
        EXPECT_TRUE(j.adjacent(v, 4));
        EXPECT_FALSE(j.adjacent(v, 5));
    }
    Graph j2 = k_join(complete(3), complete(3), 2);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(j2.degree(v), 4);
    EXPECT_THROW(k_join(cycle(4), complete(2), 3), std::invalid_argument);
    EXPECT_THROW(k_join(cycle(4), complete(2), 1, JoinAssignment{{0}, {0}, {}, {1}}), std::invalid_argument);
    Graph custom = k_join(cycle(4), complete(2), 1, JoinAssignment{{0}, {1}, {0, 1}, {1}});
    EXPECT_TRUE(custom.adjacent(1, 5));
    EXPECT_FALSE(custom.adjacent(1, 4));
}

TEST(Families, RandomGraphIsSeeded) {
    EXPECT_TRUE(random_graph(12, 0.5, 7) == random_graph(12, 0.5, 7));
    EXPECT_FALSE(random_graph(12, 0.5, 7) == random_graph(12, 0.5, 8));
    EXPECT_EQ(random_graph(9, 0.0, 1).size(), 0u);
    EXPECT_EQ(random_graph(9, 1.0, 1).size(), 36u);
}

TEST(Isomorphism, GraphCountsUpToSeven) {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(all_graphs(n).size(), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Isomorphism, KeyIsInvariantUnderRelabelling) {
    Graph g = random_graph(9, 0.4, 3);
    std::vector<Vertex> perm{4, 7, 0, 2, 8, 1, 6, 3, 5};
    std::vector<Edge> moved;
    for (auto [u, v] : g.edges()) moved.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    Graph h = build_graph(9, moved);
    EXPECT_EQ(canonical_key(g), canonical_key(h));
    EXPECT_TRUE(is_isomorphic(g, h));
    EXPECT_FALSE(is_isomorphic(cycle(6), complement(cycle(6))));
    EXPECT_FALSE(is_isomorphic(cycle(6), build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(EdgeList, RoundTrip) {
    Graph g = complementary_prism(path(5));
    const std::string text = to_edge_list(g);
    std::istringstream in(text);
    EXPECT_TRUE(read_edge_list(in) == g);
    EXPECT_EQ(text.substr(0, text.find('\n')), "10 " + std::to_string(g.size()));
}

TEST(EdgeList, CommentsAndErrors) {
    std::istringstream ok("# a triangle\n3 3\n0 1\n# middle\n1 2\n2 0\n");
    EXPECT_EQ(read_edge_list(ok).size(), 3u);
    std::istringstream short_m("3 3\n0 1\n");
    EXPECT_THROW(read_edge_list(short_m), std::invalid_argument);
    std::istringstream bad("3 1\n0 x\n");
    try {
        read_edge_list(bad);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(FamilySpec, ParsesEveryFamily) {
    EXPECT_TRUE(parse_family("cycle:7") == cycle(7));
    EXPECT_TRUE(parse_family("prism:cycle:6") == complementary_prism(cycle(6)));
    EXPECT_TRUE(parse_family("complement:path:9") == complement(path(9)));
    EXPECT_TRUE(parse_family("kpartite:2,2,2") == complete_multipartite({{2, 2, 2}}));
    EXPECT_TRUE(parse_family("bipartite:3,4") == complete_bipartite(3, 4));
    EXPECT_TRUE(parse_family("corona:complete:3") == corona_k1(complete(3)));
    EXPECT_TRUE(parse_family("empty:4") == empty_graph(4));
    EXPECT_TRUE(parse_family("kjoin:cycle:4:complete:2:k=1") == k_join(cycle(4), complete(2), 1));
    EXPECT_TRUE(parse_family("random:10:0.5:42") == random_graph(10, 0.5, 42));
}

TEST(FamilySpec, ErrorsNameTheToken) {
    for (const auto& [spec, token] : std::vector<std::pair<std::string, std::string>>{
             {"cyc:5", "cyc"}, {"cycle:x", "x"}, {"kpartite:2,,2", ""}, {"prism", "prism"}}) {
        try {
            parse_family(spec);
            ADD_FAILURE() << spec;
        } catch (const FamilySpecError& e) {
            if (!token.empty()) EXPECT_EQ(e.token(), token) << spec;
        }
    }
}
