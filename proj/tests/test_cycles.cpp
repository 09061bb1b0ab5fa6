#include <doctest.h>

#include "corpus.hpp"
#include "hamsep/connectivity.hpp"
#include "hamsep/cycles.hpp"
#include "hamsep/generators.hpp"
#include "oracles.hpp"

using namespace hamsep;

TEST_CASE("canonical cycle form") {
    Cycle c({3, 1, 4, 2});
    CHECK(std::vector<Vertex>(c.vertices().begin(), c.vertices().end()) == std::vector<Vertex>{1, 3, 2, 4});
    CHECK(Cycle({2, 4, 1, 3}) == c);
    CHECK(c.contains(4));
    CHECK(c.edges().size() == 4);
}

TEST_CASE("cycle counts") {
    const Graph oct = octahedron().graph();
    CHECK(enumerate_cycles(oct, 4).size() == 15);
    CHECK(enumerate_cycles(double_wheel(6).graph(), 4).size() == 15);
    Graph k3(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(enumerate_cycles(k3, 4).empty());
    CHECK(enumerate_cycles(k3, 3).size() == 1);
    CHECK_THROWS(enumerate_cycles(k3, 7));
}

TEST_CASE("cycle enumeration matches the sequence oracle for n <= 10") {
    std::vector<SignedEmbedding> graphs{octahedron(), k6_projective(), double_wheel(9), double_wheel(10)};
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        graphs.push_back(random_triangulation_4c(8 + static_cast<int>(seed % 3), seed, 40));
    for (const auto& e : graphs)
        for (int k = 3; k <= 6; ++k) {
            auto cycles = enumerate_cycles(e.graph(), k);
            CHECK(static_cast<long long>(cycles.size()) == oracle::k_cycles(e.graph(), k));
            CHECK(std::is_sorted(cycles.begin(), cycles.end()));
            for (const Cycle& c : cycles)
                CHECK(is_cycle_of(e.graph(), c));
        }
}

TEST_CASE("cycle counts are invariant under relabeling") {
    SignedEmbedding e = random_triangulation_4c(12, 9, 48);
    // 7 is a unit mod 12, so i -> 7i + 2 is a bijection
    std::vector<Vertex> perm(12);
    for (int i = 0; i < 12; ++i)
        perm[i] = (7 * i + 2) % 12;
    for (int k = 3; k <= 6; ++k)
        CHECK(enumerate_cycles(e.graph(), k).size() == enumerate_cycles(e.graph().relabeled(perm), k).size());
}

TEST_CASE("saturating pairs") {
    // octahedron: rim 0..3, poles 4 and 5; antipodal pairs (0,2), (1,3), (4,5)
    const Graph oct = octahedron().graph();
    std::vector<Vertex> s{0, 2};
    auto pairs = saturating_pairs(oct, s, 4);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].a == 0);
    CHECK(pairs[0].b == 2);
    CHECK(pairs[0].witness == Cycle({0, 1, 2, 3}));
    CHECK(is_cycle_of(oct, pairs[0].witness));

    std::vector<Vertex> one{3};
    CHECK(saturating_pairs(oct, one, 4).empty());
    CHECK(saturating_pairs(oct, one, 5).empty());

    std::vector<Vertex> adjacent{0, 1};
    CHECK_THROWS_AS(saturating_pairs(oct, adjacent, 4), std::invalid_argument);

    // icosahedron: 1, 3 and 9 are pairwise at distance 2
    const Graph ico = icosahedron().graph();
    std::vector<Vertex> far{1, 3, 9};
    REQUIRE(ico.is_independent(far));
    CHECK_FALSE(saturating_pairs(ico, far, 4).empty());
}

TEST_CASE("saturating pairs shrink with the set") {
    const Graph g = random_triangulation_4c(14, 4, 56).graph();
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.is_independent(std::vector<Vertex>{v}) && std::none_of(s.begin(), s.end(), [&](Vertex w) {
                return g.adjacent(v, w);
            }))
            s.push_back(v);
    for (int k : {4, 5}) {
        auto all = saturating_pairs(g, s, k);
        std::vector<Vertex> fewer(s.begin(), s.end() - 1);
        auto some = saturating_pairs(g, fewer, k);
        CHECK(some.size() <= all.size());
        for (const auto& p : some)
            CHECK(std::any_of(all.begin(), all.end(), [&](const SaturatingPair& q) { return q.a == p.a && q.b == p.b; }));
    }
}

TEST_CASE("V_C examples") {
    const Graph oct = octahedron().graph();
    // the rim 4-cycle; both poles see all four
    CHECK(vertices_dominating_cycle(oct, Cycle({0, 1, 2, 3})) == std::vector<Vertex>{4, 5});

    // double wheel n=8: rim 0..5, apexes 6 and 7. Cycle x v1 y v3: v2 sees all
    // four, and v4, v6 each see v3 or v1 plus both apexes.
    const Graph w8 = double_wheel(8).graph();
    CHECK(vertices_dominating_cycle(w8, Cycle({6, 0, 7, 2})) == std::vector<Vertex>{1, 3, 5});
    const auto a = oracle::matrix(w8);
    std::vector<Vertex> brute;
    for (Vertex v = 0; v < 8; ++v)
        if (a[v][6] + a[v][0] + a[v][7] + a[v][2] >= 3)
            brute.push_back(v);
    CHECK(brute == std::vector<Vertex>{1, 3, 5});
    CHECK_THROWS(vertices_dominating_cycle(w8, Cycle({0, 1, 2, 3})));
}

TEST_CASE("V_C bound and no large K_{3,q} on the corpus") {
    for (const auto& item : corpus::triangulations()) {
        CAPTURE(item.name);
        const Graph& g = item.embedding.graph();
        const int sigma = euler_genus(item.embedding);
        const auto a = oracle::matrix(g);
        for (const Cycle& c : enumerate_cycles(g, 4)) {
            auto vc = vertices_dominating_cycle(g, c);
            CHECK(static_cast<int>(vc.size()) <= 8 * (sigma + 1));
            for (int skip = 0; skip < 4; ++skip) {
                int common = 0;
                for (Vertex v : vc) {
                    int hits = 0;
                    for (int i = 0; i < 4; ++i)
                        hits += i != skip && a[v][c[i]];
                    common += hits == 3;
                }
                CHECK(common <= 2 * (sigma + 1));
            }
        }
        CHECK(k3q_euler_genus(2 * (sigma + 1) + 1) > sigma);
    }
}

TEST_CASE("diamond pattern shape") {
    const auto& p = diamond_six_pattern();
    CHECK(p.graph.order() == 9);
    CHECK(p.graph.size() == 15);
    CHECK(p.crucial.size() == 6);
    CHECK(p.graph.is_connected());
    CHECK_FALSE(enumerate_cycles(p.graph, 6).empty());
}

TEST_CASE("diamond matcher") {
    const auto& p = diamond_six_pattern();
    CHECK(find_diamond6(octahedron().graph(), p).empty());
    auto self = find_diamond6(p.graph, p);
    REQUIRE_FALSE(self.empty());
    for (const auto& m : self)
        CHECK(m.image_set.size() == 9);

    std::vector<SignedEmbedding> graphs{double_wheel(9), double_wheel(10), icosahedron()};
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
        graphs.push_back(random_triangulation_4c(11, seed, 44));
    for (const auto& e : graphs) {
        auto matches = find_diamond6(e.graph(), p);
        CHECK(matches.size() == oracle::pattern_images(e.graph(), p.graph, p.crucial));
        for (const auto& m : matches)
            for (const Edge& pe : p.graph.edges())
                CHECK(e.graph().adjacent(m.image[pe.u], m.image[pe.v]));
        CHECK(find_diamond6(e.graph(), p, true).size() <= matches.size());
    }
}

TEST_CASE("diamond saturation") {
    const auto& p = diamond_six_pattern();
    auto matches = find_diamond6(icosahedron().graph(), p);
    REQUIRE_FALSE(matches.empty());
    std::vector<Vertex> none;
    CHECK_FALSE(saturates_diamond6(none, matches));
    auto hit = saturates_diamond6(matches[0].crucial_image, matches);
    REQUIRE(hit);
    CHECK(hit->hit.size() >= 3);
    std::vector<Vertex> two(matches[0].crucial_image.begin(), matches[0].crucial_image.begin() + 2);
    auto maybe = saturates_diamond6(two, matches);
    CHECK_FALSE(maybe);
}

TEST_CASE("sidedness") {
    const SignedEmbedding k6 = k6_projective();
    std::set<Cycle> facial;
    for (const Face& f : trace_faces(k6))
        facial.insert(Cycle(f.boundary));
    int one = 0;
    for (const Cycle& c : enumerate_cycles(k6.graph(), 3)) {
        auto side = cycle_sidedness(k6, c);
        if (facial.count(c)) {
            CHECK(side == Sidedness::two_sided);
        } else {
            // K6 is 5-connected, so a non-facial triangle cannot bound a disc
            CHECK(side == Sidedness::one_sided);
            ++one;
        }
        for (Vertex v = 0; v < 6; ++v)
            CHECK(cycle_sidedness(k6.flipped(v), c) == side);
    }
    CHECK(one == 10);

    const SignedEmbedding ico = icosahedron().flipped(2).flipped(9);
    for (int k = 3; k <= 5; ++k)
        for (const Cycle& c : enumerate_cycles(ico.graph(), k))
            CHECK(cycle_sidedness(ico, c) == Sidedness::two_sided);
}
