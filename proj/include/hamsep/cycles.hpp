#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamsep/embedding.hpp"
#include "hamsep/graph.hpp"

namespace hamsep {

// A cycle stored in canonical form: least vertex first, then the direction
// whose second vertex is smaller.
class Cycle {
  public:
    Cycle() = default;
    explicit Cycle(std::vector<Vertex> vertices);

    std::span<const Vertex> vertices() const { return v_; }
    int length() const { return static_cast<int>(v_.size()); }
    Vertex operator[](int i) const { return v_[i]; }
    bool contains(Vertex x) const;
    std::vector<Edge> edges() const;

    auto operator<=>(const Cycle&) const = default;

  private:
    std::vector<Vertex> v_;
};

bool is_cycle_of(const Graph& g, const Cycle& c);

// All k-cycles (3 <= k <= 6) in canonical order.
std::vector<Cycle> enumerate_cycles(const Graph& g, int k);

struct SaturatingPair {
    Vertex a = 0;
    Vertex b = 0;  // a < b
    Cycle witness;
};

// Pairs of s lying on a common k-cycle (k = 4 or 5), each with the first
// witness in canonical cycle order. Throws std::invalid_argument if s is not
// independent.
std::vector<SaturatingPair> saturating_pairs(const Graph& g, std::span<const Vertex> s, int k);

// V_C: vertices with at least three neighbours on the 4-cycle c.
std::vector<Vertex> vertices_dominating_cycle(const Graph& g, const Cycle& c);

// Three diamonds (K4 minus an edge) glued in a ring at their degree-2
// vertices. The ring vertices 0, 1, 2 are ordinary; diamond i joins ring
// vertices i and i+1 through the adjacent crucial pair 3+2i, 4+2i.
struct DiamondSixPattern {
    Graph graph;
    std::vector<Vertex> crucial;  // six vertices
};

const DiamondSixPattern& diamond_six_pattern();

struct DiamondMatch {
    std::vector<Vertex> image;          // indexed by pattern vertex
    std::vector<Vertex> crucial_image;  // sorted
    std::vector<Vertex> image_set;      // sorted
};

// All embeddings of p into g as a subgraph (or induced subgraph), one per
// (image set, crucial image set).
std::vector<DiamondMatch> find_diamond6(const Graph& g, const DiamondSixPattern& p, bool induced = false);

struct DiamondSaturation {
    const DiamondMatch* match = nullptr;
    std::vector<Vertex> hit;  // crucial vertices of the match that lie in s
};

// First match with at least three crucial vertices in s.
std::optional<DiamondSaturation> saturates_diamond6(std::span<const Vertex> s,
                                                    std::span<const DiamondMatch> matches);

enum class Sidedness { one_sided, two_sided };

// One-sided iff the product of edge signs along c is -1.
Sidedness cycle_sidedness(const SignedEmbedding& e, const Cycle& c);

}  // namespace hamsep
