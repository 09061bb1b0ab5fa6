#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamsep/connectivity.hpp"
#include "hamsep/cycles.hpp"
#include "hamsep/embedding.hpp"
#include "hamsep/graph.hpp"

namespace hamsep {

using VertexSet = std::vector<Vertex>;  // sorted

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Parses "p/q" or a decimal such as "0.003".
Rational parse_rational(const std::string& text);

// Conflict-graph divisors guaranteed for the 4-cycle and 5-cycle refinements
// on a surface of Euler genus sigma.
std::int64_t four_cycle_divisor(int sigma);  // 15 (10 sigma + 1) + 1
std::int64_t five_cycle_divisor(int sigma);  // 30 (40 sigma + 1) + 1

// ---- stages -------------------------------------------------------------

// Vertices of degree at most 6. Throws HypothesisError if the minimum degree is below 4.
VertexSet stage1_low_degree(const Graph& g);

// Largest colour class inside s1 of a smallest-last greedy colouring of g.
// Throws std::logic_error if the colouring needs more than six colours.
VertexSet stage2_independent(const Graph& g, const VertexSet& s1);

struct Stage3Result {
    VertexSet kept;
    int max_removed_per_cycle = 0;
};

// Drops every vertex that lies on a separating 4-cycle or sees three of its vertices.
Stage3Result stage3_prune_separating(const Graph& g, const VertexSet& s2, const std::vector<Cycle>& separating4);

enum class SaturationKind { four_cycle, five_cycle, diamond6 };

std::string to_string(SaturationKind kind);

struct ConflictGraph {
    VertexSet vertices;
    std::vector<Edge> edges;  // pairs of vertex ids, sorted
    int degeneracy = 0;
};

struct RefinementResult {
    VertexSet kept;
    ConflictGraph conflicts;
};

// Smallest-last order: repeatedly remove a vertex of minimum remaining degree
// (lowest id on ties). Also reports the degeneracy.
std::vector<Vertex> smallest_last_order(int n, const std::vector<std::vector<int>>& adjacency, int* degeneracy);

ConflictGraph build_conflict_graph(const Graph& g, const VertexSet& s, SaturationKind kind,
                                   const std::vector<DiamondMatch>* diamonds = nullptr);

// Independent set of the conflict graph taken greedily along a smallest-last
// order; never saturates a configuration of `kind`. Throws HypothesisError on
// violated preconditions (dependent s, degree > 6, or for the 4-cycle kind a
// saturated separating 4-cycle; for the others a saturated 4-cycle).
RefinementResult refine_no_saturation(const Graph& g, const VertexSet& s, SaturationKind kind, int sigma,
                                      const std::vector<DiamondMatch>* diamonds = nullptr);

// ---- conditions (i)-(v) -------------------------------------------------

struct ConditionCheck {
    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;  // (i) .. (v)

    bool all_passed() const;
};

ConditionReport verify_conditions(const Graph& g, const SignedEmbedding& e, const VertexSet& s);
ConditionReport verify_conditions(const SignedEmbedding& e, const VertexSet& s);

// ---- edge choices -------------------------------------------------------

struct EdgeChoiceSet {
    std::vector<std::pair<Vertex, Edge>> assignment;  // one incident edge per vertex of S
    std::vector<Edge> f;                              // sorted
};

// Yields the full product of incident-edge choices in mixed-radix order when
// it has at most `budget` elements, else `budget` distinct seeded samples.
class EdgeChoiceStream {
  public:
    EdgeChoiceStream(const Graph& g, const VertexSet& s, std::uint64_t budget, std::uint64_t seed = 1);

    std::optional<EdgeChoiceSet> next();

    bool exhaustive() const { return exhaustive_; }
    // Product of degrees, saturated at UINT64_MAX.
    std::uint64_t product() const { return product_; }
    std::uint64_t planned() const { return planned_; }

  private:
    EdgeChoiceSet make(const std::vector<int>& digits) const;

    VertexSet s_;
    std::vector<std::vector<Edge>> options_;
    bool exhaustive_ = true;
    std::uint64_t product_ = 1;
    std::uint64_t planned_ = 0;
    std::uint64_t emitted_ = 0;
    std::vector<int> digits_;
    std::vector<std::vector<int>> samples_;
};

std::vector<EdgeChoiceSet> enumerate_edge_choices(const Graph& g, const VertexSet& s, std::uint64_t budget,
                                                  std::uint64_t seed = 1);

struct Lemma7Counterexample {
    std::vector<Edge> f;
    bool four_connected = false;
    bool hamiltonian_checked = false;
    bool hamiltonian = false;
};

struct Lemma7Report {
    std::uint64_t checked = 0;
    std::uint64_t hamiltonian_checked = 0;
    std::vector<Lemma7Counterexample> counterexamples;
};

// For each F: G - F must be 4-connected and, with check_hamiltonicity, hamiltonian.
Lemma7Report check_lemma7(const Graph& g, const std::vector<EdgeChoiceSet>& choices, bool check_hamiltonicity = true);
Lemma7Report check_lemma7(const Graph& g, EdgeChoiceStream& choices, bool check_hamiltonicity = true);

// ---- pipeline -----------------------------------------------------------

struct StageRecord {
    std::string name;
    VertexSet vertices;
    double floor = 0;  // lower bound the stage is expected to meet
    bool floor_holds = true;
};

struct WitnessReport {
    int n = 0;
    int m = 0;
    int genus = 0;
    Rational c;
    std::vector<StageRecord> stages;  // S1 .. S6
    int separators_total = 0;
    int separators_minimal = 0;
    int separating_3_cycles = 0;
    int separating_4_cycles = 0;
    bool c_threshold_ok = false;     // #4-separators <= c n
    double asymptotic_s3_floor = 0;       // n/18 - 18 c n
    int stage3_max_removed_per_cycle = 0;
    std::vector<int> conflict_degeneracy;  // for S4, S5, S6
    int diamond_matches = 0;
    std::optional<double> diamond_ratio;   // |S6| / |S5|
    ConditionReport conditions;
    std::optional<Lemma7Report> lemma7;
    bool lemma7_exhaustive = false;

    const VertexSet& final_set() const { return stages.back().vertices; }
    bool floors_hold() const;
};

// Runs the stages, checks the final set and records the separator census.
// Throws HypothesisError unless e is a 4-connected triangulation of the sphere
// or projective plane, std::invalid_argument unless 0 <= c < 1/324.
WitnessReport run_pipeline(const SignedEmbedding& e, Rational c);

// Checks G - F over up to `budget` edge choice sets (skipped when S is empty).
void attach_lemma7(WitnessReport& report, const SignedEmbedding& e, std::uint64_t budget, std::uint64_t seed = 1,
                   bool check_hamiltonicity = true);

}  // namespace hamsep
