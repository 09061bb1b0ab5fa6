#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hamsep/graph.hpp"

namespace hamsep {

enum class CountMethod { backtrack, subset_dp };

std::string to_string(CountMethod m);

// Number of undirected hamiltonian cycles, each counted once as an edge set.
struct HamCount {
    std::uint64_t value = 0;
    CountMethod method = CountMethod::backtrack;
    std::chrono::duration<double> elapsed{};
};

struct BacktrackOptions {
    // How many extension steps between checks that the unvisited vertices
    // still hang together with the path end.
    int connectivity_check_interval = 4;
};

struct DpOptions {
    int max_vertices = 22;
};

// Anchored at vertex 0; a cycle is counted in the orientation whose second
// vertex is smaller than its last. Requires 3 <= n <= 64.
HamCount count_hc_backtrack(const Graph& g, const BacktrackOptions& options = {});

// Counts hamiltonian paths from vertex 0 over vertex subsets and closes them.
HamCount count_hc_dp(const Graph& g, const DpOptions& options = {});

struct HamiltonianResult {
    bool hamiltonian = false;
    std::vector<Vertex> cycle;  // witness in traversal order
};

HamiltonianResult is_hamiltonian(const Graph& g, const BacktrackOptions& options = {});

// Hamiltonian cycles of g that use no edge of f. Throws std::invalid_argument
// if f is not a subset of E(g).
HamCount count_hc_avoiding(const Graph& g, std::span<const Edge> f, CountMethod method = CountMethod::backtrack);

// 2(n - 2)(n - 4)
std::uint64_t double_wheel_cycle_count(int n);

}  // namespace hamsep
