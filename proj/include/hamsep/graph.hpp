#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamsep {

using Vertex = int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or bytes.
struct ParseError : Error {
    using Error::Error;
};

// The input violates a hypothesis the operation relies on (e.g. not 4-connected).
struct HypothesisError : Error {
    using Error::Error;
};

// A configured size or work budget was exceeded.
struct BudgetError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool has(Vertex x) const { return x == u || x == v; }

    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return m_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex a, Vertex b) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

    std::vector<Edge> edges() const;
    int count_common_neighbors(Vertex a, Vertex b) const;

    bool is_connected() const;
    // Connected components after deleting `removed` (vertices marked true are skipped).
    int count_components(const std::vector<char>& removed) const;

    Graph without_edges(std::span<const Edge> removed) const;
    // perm[v] is the new label of v.
    Graph relabeled(std::span<const Vertex> perm) const;

    bool is_independent(std::span<const Vertex> set) const;

    // Adjacency as 64-bit masks; only valid when order() <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

}  // namespace hamsep
