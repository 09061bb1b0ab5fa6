#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>

#include "hamsep/embedding.hpp"

namespace hamsep {

// Reproducible across standard libraries: only raw engine output is used.
using Rng = std::mt19937_64;
std::size_t uniform_index(Rng& rng, std::size_t bound);

// Rim vertices 0..n-3 in cyclic order, apexes n-2 and n-1.
SignedEmbedding double_wheel(int n);
SignedEmbedding octahedron();
SignedEmbedding icosahedron();
// K6 as the antipodal quotient of the icosahedron: 10 triangles, Euler genus 1.
SignedEmbedding k6_projective();

// Replaces the edge shared by two triangles of a sphere triangulation with
// the opposite diagonal. Returns nullopt when that diagonal already exists.
std::optional<SignedEmbedding> diagonal_flip(const SignedEmbedding& e, Edge edge);

// Double wheel followed by `flips` random flip attempts (uniform edge, skipped
// when the new diagonal already exists). The walk then continues with random
// flips that do not increase the number of triangles until it sits on a
// 4-connected triangulation, for at most `retry_budget` further attempts.
SignedEmbedding random_triangulation_4c(int n, std::uint64_t seed, int flips, int retry_budget = 1000000);

inline constexpr int kNoTarget = std::numeric_limits<int>::max();

struct LowSeparatorOptions {
    int walk_flips = -1;      // flips of the starting walk; -1 means 4n
    int plateau_moves = -1;   // equal-cost moves allowed in total; -1 means 4n
    int max_steps = -1;       // -1 means 40n
};

struct LowSeparatorResult {
    SignedEmbedding embedding;
    int start_cost = 0;  // separating 4-cycles of the starting sample
    int final_cost = 0;
    int steps = 0;
    bool reached_target = false;
};

// Hill-climbs over flips that keep the triangulation 4-connected, minimising
// the number of separating 4-cycles. Stops at `target` or a local minimum.
LowSeparatorResult low_separator_family(int n, std::uint64_t seed, int target = 0,
                                        const LowSeparatorOptions& options = {});

}  // namespace hamsep
