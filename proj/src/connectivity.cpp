#include "hamsep/connectivity.hpp"

#include <algorithm>
#include <set>

namespace hamsep {

namespace {

constexpr int kInfinite = 1 << 29;

// Vertex-split network: v_in = 2v, v_out = 2v + 1, internal arc of capacity 1
// (unbounded for the terminals), graph edges as unbounded arcs out -> in.
class SplitNetwork {
  public:
    struct Arc {
        int to;
        int cap;
    };

    SplitNetwork(const Graph& g, Vertex s, Vertex t) : head_(2 * g.order()), s_(s), t_(t) {
        for (Vertex v = 0; v < g.order(); ++v)
            add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kInfinite : 1);
        for (const Edge& e : g.edges()) {
            add_arc(2 * e.u + 1, 2 * e.v, kInfinite);
            add_arc(2 * e.v + 1, 2 * e.u, kInfinite);
        }
    }

    int source() const { return 2 * s_ + 1; }
    int sink() const { return 2 * t_; }
    int nodes() const { return static_cast<int>(head_.size()); }

    int max_flow(int limit) {
        int flow = 0;
        std::vector<int> parent_arc(nodes());
        while (flow < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::vector<int> queue{source()};
            parent_arc[source()] = -2;
            for (std::size_t h = 0; h < queue.size() && parent_arc[sink()] == -1; ++h) {
                int x = queue[h];
                for (int a : head_[x])
                    if (arcs_[a].cap > 0 && parent_arc[arcs_[a].to] == -1) {
                        parent_arc[arcs_[a].to] = a;
                        queue.push_back(arcs_[a].to);
                    }
            }
            if (parent_arc[sink()] == -1)
                break;
            for (int x = sink(); x != source();) {
                int a = parent_arc[x];
                arcs_[a].cap -= 1;
                arcs_[a ^ 1].cap += 1;
                x = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

    // Nodes reachable from `from` (forward) or reaching it (backward) in the
    // residual graph, added to `mark`.
    void close(int from, bool forward, std::vector<char>& mark) const {
        std::vector<int> stack{from};
        mark[from] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a : head_[x]) {
                // forward: residual arc x -> to; backward: residual arc to -> x is a^1
                const Arc& arc = forward ? arcs_[a] : arcs_[a ^ 1];
                int y = arcs_[a].to;
                if (arc.cap > 0 && !mark[y]) {
                    mark[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }

  private:
    void add_arc(int from, int to, int cap) {
        head_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        head_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
    Vertex s_, t_;
};

// Enumerates every closed set of the residual graph that contains the source
// and avoids the sink; each one is a minimum cut.
void enumerate_min_cuts(const SplitNetwork& net, std::vector<char> source_side, std::vector<char> sink_side,
                        std::set<std::vector<Vertex>>& cuts) {
    int free_node = -1;
    for (int x = 0; x < net.nodes(); ++x)
        if (!source_side[x] && !sink_side[x]) {
            free_node = x;
            break;
        }
    if (free_node < 0) {
        std::vector<Vertex> cut;
        for (int v = 0; 2 * v < net.nodes(); ++v)
            if (source_side[2 * v] && !source_side[2 * v + 1])
                cut.push_back(v);
        cuts.insert(std::move(cut));
        return;
    }
    auto with_source = source_side;
    net.close(free_node, true, with_source);
    enumerate_min_cuts(net, std::move(with_source), sink_side, cuts);
    net.close(free_node, false, sink_side);
    enumerate_min_cuts(net, std::move(source_side), std::move(sink_side), cuts);
}

Separator as_separator(std::span<const Vertex> vs) {
    Separator s{vs[0], vs[1], vs[2], vs[3]};
    std::sort(s.begin(), s.end());
    return s;
}

void require_four_connected(const Graph& g) {
    if (!is_k_connected(g, 4))
        throw HypothesisError("graph is not 4-connected; 4-separator census requires it");
}

std::vector<Separator> brute_force_separators(const Graph& g) {
    const int n = g.order();
    std::vector<Separator> out;
    std::vector<char> removed(n, 0);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    removed[a] = removed[b] = removed[c] = removed[d] = 1;
                    if (g.count_components(removed) >= 2)
                        out.push_back({a, b, c, d});
                    removed[a] = removed[b] = removed[c] = removed[d] = 0;
                }
    return out;
}

std::vector<Separator> flow_separators(const Graph& g) {
    // Some vertex among the first five lies outside any given 4-separator and
    // is separated by it from some non-neighbour; that separator is then a
    // minimum cut for the pair.
    std::set<std::vector<Vertex>> cuts;
    const int n = g.order();
    for (Vertex s = 0; s < std::min(n, 5); ++s)
        for (Vertex t = 0; t < n; ++t) {
            if (t == s || g.adjacent(s, t))
                continue;
            SplitNetwork net(g, s, t);
            if (net.max_flow(5) != 4)
                continue;
            std::vector<char> source_side(net.nodes(), 0), sink_side(net.nodes(), 0);
            net.close(net.source(), true, source_side);
            net.close(net.sink(), false, sink_side);
            enumerate_min_cuts(net, std::move(source_side), std::move(sink_side), cuts);
        }
    std::vector<Separator> out;
    for (const auto& c : cuts)
        if (c.size() == 4)
            out.push_back(as_separator(c));
    return out;
}

std::vector<Separator> cycle_candidate_separators(const Graph& g) {
    std::set<Separator> found;
    for (const Cycle& c : enumerate_cycles(g, 4)) {
        Separator s = as_separator(c.vertices());
        if (!found.contains(s) && separates(g, s))
            found.insert(s);
    }
    return {found.begin(), found.end()};
}

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
    if (s == t || g.adjacent(s, t))
        throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
    SplitNetwork net(g, s, t);
    return net.max_flow(limit);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2)
        throw std::invalid_argument("vertex connectivity needs at least two vertices");
    if (!g.is_connected())
        throw HypothesisError("graph is not connected");
    int best = n - 1;
    for (Vertex i = 0; i <= best && i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j))
                best = std::min(best, local_connectivity(g, i, j, best));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    const int n = g.order();
    if (n <= k)
        return false;
    if (k <= 0)
        return true;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j) && local_connectivity(g, i, j, k) < k)
                return false;
    return true;
}

bool separates(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> removed(g.order(), 0);
    for (Vertex v : set)
        removed[v] = 1;
    return g.count_components(removed) >= 2;
}

SeparatorSet enumerate_4_separators(const Graph& g, const SeparatorOptions& options) {
    require_four_connected(g);
    SeparatorMethod method = options.method;
    if (method == SeparatorMethod::automatic)
        method = g.order() <= options.brute_force_limit ? SeparatorMethod::brute_force
                                                        : SeparatorMethod::cycle_candidates;
    SeparatorSet result;
    switch (method) {
    case SeparatorMethod::brute_force:
        if (g.order() > options.brute_force_limit)
            throw BudgetError("brute-force separator enumeration limited to n <= " +
                              std::to_string(options.brute_force_limit));
        result.separators = brute_force_separators(g);
        break;
    case SeparatorMethod::flow:
        result.separators = flow_separators(g);
        break;
    case SeparatorMethod::cycle_candidates:
    case SeparatorMethod::automatic:
        result.separators = cycle_candidate_separators(g);
        break;
    }
    std::sort(result.separators.begin(), result.separators.end());
    for (const Separator& s : result.separators) {
        bool minimal = true;
        for (int drop = 0; drop < 4 && minimal; ++drop) {
            std::vector<Vertex> rest;
            for (int i = 0; i < 4; ++i)
                if (i != drop)
                    rest.push_back(s[i]);
            minimal = !separates(g, rest);
        }
        result.minimal += minimal ? 1 : 0;
    }
    return result;
}

std::vector<Cycle> enumerate_separating_cycles(const Graph& g, int k) {
    if (k != 3 && k != 4)
        throw std::invalid_argument("separating cycles are enumerated for k = 3 or 4");
    std::vector<Cycle> out;
    for (Cycle& c : enumerate_cycles(g, k))
        if (separates(g, c.vertices()))
            out.push_back(std::move(c));
    return out;
}

std::vector<Cycle> enumerate_separating_cycles(const SignedEmbedding& e, int k) {
    return enumerate_separating_cycles(e.graph(), k);
}

}  // namespace hamsep
