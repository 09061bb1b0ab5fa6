#include <doctest.h>

#include "corpus.hpp"
#include "hamsep/connectivity.hpp"
#include "hamsep/generators.hpp"
#include "oracles.hpp"

using namespace hamsep;

namespace {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("connectivity examples") {
    CHECK(vertex_connectivity(octahedron().graph()) == 4);
    CHECK(vertex_connectivity(complete(6)) == 5);
    CHECK(vertex_connectivity(double_wheel(9).graph()) == 4);
    CHECK(is_k_connected(octahedron().graph(), 4));
    CHECK_FALSE(is_k_connected(octahedron().graph(), 5));
    CHECK_FALSE(is_k_connected(complete(4), 4));  // needs n > k

    Graph two(4, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(vertex_connectivity(two), HypothesisError);
    CHECK_FALSE(is_k_connected(two, 1));
}

TEST_CASE("flow connectivity matches subset removal for n <= 12") {
    for (const auto& item : corpus::triangulations()) {
        const Graph& g = item.embedding.graph();
        if (g.order() > 12)
            continue;
        CAPTURE(item.name);
        CHECK(vertex_connectivity(g) == oracle::connectivity(g));
    }
    // and on a few graphs that are not 4-connected
    Graph w = double_wheel(8).graph().without_edges(std::vector<Edge>{Edge(0, 6)});
    CHECK(vertex_connectivity(w) == oracle::connectivity(w));
    CHECK(vertex_connectivity(w) == 3);
}

TEST_CASE("4-separator census examples") {
    CHECK(enumerate_4_separators(octahedron().graph()).total() == 3);
    CHECK(enumerate_4_separators(k6_projective().graph()).total() == 0);
    auto w7 = enumerate_4_separators(double_wheel(7).graph());
    CHECK(w7.total() == 5);
    CHECK(w7.minimal == 5);
    for (const Separator& s : w7.separators) {
        CHECK(s[2] == 5);  // both apexes
        CHECK(s[3] == 6);
    }
    CHECK(enumerate_4_separators(double_wheel(10).graph()).total() == 20);
    CHECK_THROWS_AS(enumerate_4_separators(double_wheel(8).graph().without_edges(std::vector<Edge>{Edge(0, 6)})),
                    HypothesisError);
    CHECK_THROWS_AS(enumerate_4_separators(double_wheel(12).graph(), {SeparatorMethod::brute_force, 10}),
                    BudgetError);
}

TEST_CASE("all separator methods agree with the subset oracle") {
    for (const auto& item : corpus::triangulations()) {
        const Graph& g = item.embedding.graph();
        if (g.order() > 16)
            continue;
        CAPTURE(item.name);
        auto expected = oracle::separators(g, 4);
        for (auto method : {SeparatorMethod::brute_force, SeparatorMethod::flow, SeparatorMethod::cycle_candidates}) {
            auto got = enumerate_4_separators(g, {method, 50});
            std::set<std::vector<int>> as_set;
            for (const Separator& s : got.separators)
                as_set.insert(std::vector<int>(s.begin(), s.end()));
            CHECK(as_set == expected);
        }
    }
}

TEST_CASE("separating cycles") {
    CHECK(enumerate_separating_cycles(octahedron(), 4).size() == 3);
    CHECK(enumerate_separating_cycles(k6_projective(), 3).empty());
    auto w7 = enumerate_separating_cycles(double_wheel(7), 4);
    CHECK(w7.size() == 5);
    for (const Cycle& c : w7) {
        CHECK(c.contains(5));
        CHECK(c.contains(6));
    }
    for (const auto& item : corpus::triangulations()) {
        // 4-connected: no separating triangles
        CHECK(enumerate_separating_cycles(item.embedding, 3).empty());
    }
}

TEST_CASE("every planar 4-separator spans a separating 4-cycle") {
    for (const auto& item : corpus::triangulations()) {
        if (euler_genus(item.embedding) != 0 || item.embedding.order() > 20)
            continue;
        CAPTURE(item.name);
        std::set<Separator> from_cycles;
        for (const Cycle& c : enumerate_separating_cycles(item.embedding, 4)) {
            Separator s{c[0], c[1], c[2], c[3]};
            std::sort(s.begin(), s.end());
            from_cycles.insert(s);
        }
        auto seps = enumerate_4_separators(item.embedding.graph(), {SeparatorMethod::brute_force, 50});
        CHECK(std::set<Separator>(seps.separators.begin(), seps.separators.end()) == from_cycles);
    }
}

TEST_CASE("separator count is invariant under relabeling") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        SignedEmbedding e = random_triangulation_4c(11, seed, 44);
        std::vector<Vertex> perm(e.order());
        for (int i = 0; i < e.order(); ++i)
            perm[i] = (i * 5 + 3) % e.order();
        CHECK(enumerate_4_separators(e.graph()).total() ==
              enumerate_4_separators(e.graph().relabeled(perm)).total());
    }
}
