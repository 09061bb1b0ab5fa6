#include <doctest.h>

#include "hamsep/graph.hpp"

using namespace hamsep;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("edges are normalised") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(e.other(2) == 5);
    CHECK(Edge(1, 3) == Edge(3, 1));
    CHECK(to_string(e) == "2-5");
}

TEST_CASE("graph construction rejects loops, parallel edges and bad ids") {
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(3, twice), std::invalid_argument);
    std::vector<Edge> far{{0, 7}};
    CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
}

TEST_CASE("basic queries") {
    Graph g = path(4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.is_connected());
    CHECK(g.count_components({0, 1, 0, 0}) == 2);
    CHECK(g.is_independent(std::vector<Vertex>{0, 2}));
    CHECK_FALSE(g.is_independent(std::vector<Vertex>{0, 1}));
    CHECK(g.count_common_neighbors(0, 2) == 1);
}

TEST_CASE("edge deletion and relabeling") {
    Graph g = path(4);
    std::vector<Edge> cut{{1, 2}};
    Graph h = g.without_edges(cut);
    CHECK(h.size() == 2);
    CHECK_FALSE(h.is_connected());

    std::vector<Vertex> perm{3, 2, 1, 0};
    Graph r = g.relabeled(perm);
    CHECK(r == g);  // the path reversed is the same path
}

TEST_CASE("adjacency masks refuse graphs above 64 vertices") {
    CHECK(path(64).adjacency_masks().size() == 64);
    CHECK_THROWS_AS(path(65).adjacency_masks(), BudgetError);
}
