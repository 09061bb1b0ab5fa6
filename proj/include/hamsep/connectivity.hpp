#pragma once

#include <array>
#include <vector>

#include "hamsep/cycles.hpp"
#include "hamsep/embedding.hpp"
#include "hamsep/graph.hpp"

namespace hamsep {

using Separator = std::array<Vertex, 4>;  // sorted

struct SeparatorSet {
    std::vector<Separator> separators;  // sorted, unique
    int minimal = 0;                    // inclusion-minimal separators among them

    int total() const { return static_cast<int>(separators.size()); }
};

enum class SeparatorMethod {
    automatic,    // brute force up to the budget, 4-cycle candidates above it
    brute_force,  // every 4-subset
    flow,         // all minimum cuts of vertex-split flow networks
    cycle_candidates,
};

struct SeparatorOptions {
    SeparatorMethod method = SeparatorMethod::automatic;
    int brute_force_limit = 50;
};

// Number of vertex-disjoint s-t paths for non-adjacent s, t, capped at `limit`.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

// Minimum over non-adjacent pairs of the local connectivity; n - 1 for
// complete graphs. Throws HypothesisError on disconnected input.
int vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, int k);

bool separates(const Graph& g, std::span<const Vertex> set);

// Every 4-element separating set. Throws HypothesisError unless g is
// 4-connected and BudgetError when brute force is requested beyond the limit.
SeparatorSet enumerate_4_separators(const Graph& g, const SeparatorOptions& options = {});

// k-cycles (k = 3 or 4) whose vertex set separates the graph.
std::vector<Cycle> enumerate_separating_cycles(const Graph& g, int k);
std::vector<Cycle> enumerate_separating_cycles(const SignedEmbedding& e, int k);

}  // namespace hamsep
