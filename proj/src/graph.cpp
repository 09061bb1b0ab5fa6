#include "hamsep/graph.hpp"

#include <algorithm>
#include <numeric>

namespace hamsep {

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::span<const Edge> edges) : adj_(n < 0 ? 0 : n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge " + to_string(e) + " out of range");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("parallel edge");
    }
    m_ = static_cast<int>(edges.size());
}

int Graph::min_degree() const {
    int d = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v)
        d = std::max(d, degree(v));
    return d;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b))
        return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::count_common_neighbors(Vertex a, Vertex b) const {
    int count = 0;
    auto i = adj_[a].begin();
    auto j = adj_[b].begin();
    while (i != adj_[a].end() && j != adj_[b].end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool Graph::is_connected() const {
    return order() <= 1 || count_components(std::vector<char>(order(), 0)) == 1;
}

int Graph::count_components(const std::vector<char>& removed) const {
    std::vector<char> seen(removed);
    std::vector<Vertex> stack;
    int components = 0;
    for (Vertex s = 0; s < order(); ++s) {
        if (seen[s])
            continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return components;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> kept;
    std::vector<Edge> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    for (const Edge& e : edges())
        if (!std::binary_search(drop.begin(), drop.end(), e))
            kept.push_back(e);
    return Graph(order(), kept);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != order())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> mapped;
    for (const Edge& e : edges())
        mapped.emplace_back(perm[e.u], perm[e.v]);
    return Graph(order(), mapped);
}

bool Graph::is_independent(std::span<const Vertex> set) const {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || adjacent(set[i], set[j]))
                return false;
    return true;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (order() > 64)
        throw BudgetError("bitmask routines support at most 64 vertices");
    std::vector<std::uint64_t> masks(order(), 0);
    for (Vertex v = 0; v < order(); ++v)
        for (Vertex w : adj_[v])
            masks[v] |= std::uint64_t{1} << w;
    return masks;
}

}  // namespace hamsep
