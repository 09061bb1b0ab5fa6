#include "hamsep/hamilton.hpp"

#include <algorithm>
#include <bit>

namespace hamsep {

std::string to_string(CountMethod m) {
    return m == CountMethod::backtrack ? "backtrack" : "subset_dp";
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }

class Backtracker {
  public:
    Backtracker(const Graph& g, const BacktrackOptions& options, bool stop_at_first)
        : adj_(g.adjacency_masks()),
          n_(g.order()),
          interval_(std::max(1, options.connectivity_check_interval)),
          stop_at_first_(stop_at_first) {
        if (n_ < 3)
            throw std::invalid_argument("hamiltonian cycles need at least three vertices");
        full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    }

    void run() {
        path_.assign(1, 0);
        for (Mask rest = adj_[0]; rest && !done(); rest &= rest - 1) {
            int second = std::countr_zero(rest);
            // last vertex must be a root neighbour above `second`
            above_ = full_ & ~(bit(second + 1) - 1);
            path_.push_back(second);
            extend(bit(0) | bit(second), second, 1);
            path_.pop_back();
        }
    }

    std::uint64_t count() const { return count_; }
    const std::vector<Vertex>& witness() const { return witness_; }

  private:
    bool done() const { return stop_at_first_ && !witness_.empty(); }

    void extend(Mask visited, int end, int depth) {
        if (visited == full_) {
            if ((adj_[end] & bit(0)) && (above_ & bit(end))) {
                if (__builtin_add_overflow(count_, std::uint64_t{1}, &count_))
                    throw OverflowError("hamiltonian cycle count exceeds 64 bits");
                if (stop_at_first_)
                    witness_ = path_;
            }
            return;
        }
        const Mask unvisited = full_ & ~visited;
        if (depth % interval_ == 0 && !unvisited_hang_together(unvisited, end))
            return;
        for (Mask cand = adj_[end] & unvisited; cand && !done(); cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            const Mask left = unvisited & ~bit(w);
            if (left) {
                if (!(adj_[w] & left))
                    continue;
                if (!(adj_[0] & left & above_))
                    continue;
                bool ok = true;
                const Mask open = left | bit(w) | bit(0);
                for (Mask lost = adj_[end] & left; lost; lost &= lost - 1) {
                    int x = std::countr_zero(lost);
                    if (std::popcount(adj_[x] & open) < 2) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
            }
            path_.push_back(w);
            extend(visited | bit(w), w, depth + 1);
            path_.pop_back();
        }
    }

    bool unvisited_hang_together(Mask unvisited, int end) const {
        Mask reached = adj_[end] & unvisited;
        Mask frontier = reached;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            Mask fresh = adj_[x] & unvisited & ~reached;
            reached |= fresh;
            frontier |= fresh;
        }
        return reached == unvisited;
    }

    std::vector<Mask> adj_;
    int n_;
    int interval_;
    bool stop_at_first_;
    Mask full_ = 0;
    Mask above_ = 0;
    std::uint64_t count_ = 0;
    std::vector<Vertex> path_;
    std::vector<Vertex> witness_;
};

}  // namespace

HamCount count_hc_backtrack(const Graph& g, const BacktrackOptions& options) {
    auto start = Clock::now();
    Backtracker bt(g, options, false);
    bt.run();
    return {bt.count(), CountMethod::backtrack, Clock::now() - start};
}

HamCount count_hc_dp(const Graph& g, const DpOptions& options) {
    const int n = g.order();
    if (n < 3)
        throw std::invalid_argument("hamiltonian cycles need at least three vertices");
    if (n > options.max_vertices)
        throw BudgetError("subset DP limited to n <= " + std::to_string(options.max_vertices));
    auto start = Clock::now();
    // Vertices 1..n-1 become bits 0..n-2; paths start at vertex 0.
    const int k = n - 1;
    const std::size_t masks = std::size_t{1} << k;
    std::vector<std::uint64_t> ways(masks * k, 0);
    std::vector<Mask> adj(n, 0);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            if (w != 0)
                adj[v - 1] |= bit(w - 1);
    for (Vertex w : g.neighbors(0))
        ways[bit(w - 1) * k + (w - 1)] = 1;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        for (Mask ends = mask; ends; ends &= ends - 1) {
            int v = std::countr_zero(ends);
            std::uint64_t here = ways[mask * k + v];
            if (!here)
                continue;
            for (Mask next = adj[v] & ~Mask(mask); next; next &= next - 1) {
                int w = std::countr_zero(next);
                auto& slot = ways[(mask | bit(w)) * k + w];
                if (__builtin_add_overflow(slot, here, &slot))
                    throw OverflowError("hamiltonian path count exceeds 64 bits");
            }
        }
    }
    std::uint64_t directed = 0;
    for (Vertex w : g.neighbors(0))
        if (__builtin_add_overflow(directed, ways[(masks - 1) * k + (w - 1)], &directed))
            throw OverflowError("hamiltonian cycle count exceeds 64 bits");
    return {directed / 2, CountMethod::subset_dp, Clock::now() - start};
}

HamiltonianResult is_hamiltonian(const Graph& g, const BacktrackOptions& options) {
    Backtracker bt(g, options, true);
    bt.run();
    return {!bt.witness().empty(), bt.witness()};
}

HamCount count_hc_avoiding(const Graph& g, std::span<const Edge> f, CountMethod method) {
    for (const Edge& e : f)
        if (!g.adjacent(e.u, e.v))
            throw std::invalid_argument("edge " + to_string(e) + " is not in the graph");
    Graph rest = g.without_edges(f);
    return method == CountMethod::backtrack ? count_hc_backtrack(rest) : count_hc_dp(rest);
}

std::uint64_t double_wheel_cycle_count(int n) {
    return 2ull * static_cast<std::uint64_t>(n - 2) * static_cast<std::uint64_t>(n - 4);
}

}  // namespace hamsep
