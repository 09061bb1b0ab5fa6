#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamsep/graph.hpp"

namespace hamsep {

struct Face {
    std::vector<Vertex> boundary;  // cyclic

    int length() const { return static_cast<int>(boundary.size()); }
};

// A graph with a per-vertex cyclic order of neighbours and a sign (+1/-1)
// on every edge. Signs of -1 mark edges along which the local orientation
// flips, which is what lets the rotation system describe the projective plane.
//
// Each rotation is stored starting from its least neighbour; two embeddings
// that differ only in where a cyclic order starts compare equal.
class SignedEmbedding {
  public:
    SignedEmbedding() = default;
    // signs[v][i] is the sign of the edge {v, rotation[v][i]}. Throws ParseError
    // when the rotation is not symmetric, the graph is not simple or not
    // connected, or the two ends of an edge disagree on its sign.
    SignedEmbedding(std::vector<std::vector<Vertex>> rotation, std::vector<std::vector<int>> signs);
    // All signs +1.
    explicit SignedEmbedding(std::vector<std::vector<Vertex>> rotation);

    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    int size() const { return graph_.size(); }

    std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
    int sign(Vertex u, Vertex v) const;
    int sign_at(Vertex v, int index) const { return signs_[v][index]; }
    bool all_positive() const;

    // Position of u in the rotation at v, or -1.
    int position(Vertex v, Vertex u) const;
    Vertex successor(Vertex v, Vertex u) const;
    Vertex predecessor(Vertex v, Vertex u) const;

    // Reverses the rotation at v and negates the signs of its edges; the
    // result describes the same embedding.
    SignedEmbedding flipped(Vertex v) const;
    // perm[v] is the new label of v.
    SignedEmbedding relabeled(std::span<const Vertex> perm) const;
    // Switches vertices along a BFS tree so that tree edges carry +1. A
    // sphere embedding comes out with every sign +1.
    SignedEmbedding normalized() const;

    friend bool operator==(const SignedEmbedding&, const SignedEmbedding&) = default;

  private:
    void build();

    Graph graph_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<int>> signs_;
};

// Builds an embedding from a list of triangles forming a closed surface.
// Orientable inputs listed with consistent orientation yield all signs +1.
SignedEmbedding embedding_from_faces(int n, std::span<const std::array<Vertex, 3>> faces);

// plantri planar_code. Vertices are 1-based on the wire, 0-based in memory.
std::vector<SignedEmbedding> parse_planar_code(std::string_view bytes);
std::string serialize_planar_code(std::span<const SignedEmbedding> embeddings);

// Text format: '#' comments, "n <count>", then per vertex
// "v <id>: <nbr>[-] <nbr>[-] ..." with a trailing '-' marking a negative edge.
SignedEmbedding parse_signed_rotation(std::string_view text);
std::string serialize_signed_rotation(const SignedEmbedding& e);

// Faces in tracing order, starting each orbit from the least unused directed edge.
std::vector<Face> trace_faces(const SignedEmbedding& e);

int euler_characteristic(const SignedEmbedding& e);
int euler_genus(const SignedEmbedding& e);

struct ValidationReport {
    int n = 0;
    int m = 0;
    int faces = 0;
    int genus = 0;
    bool simple = true;
    bool connected = true;
    bool triangular = true;
    bool genus_supported = true;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate_triangulation(const SignedEmbedding& e);

// Throws HypothesisError unless e is a triangulation of the sphere or the
// projective plane. Returns its Euler genus.
int require_supported_triangulation(const SignedEmbedding& e);

// Euler genus of K_{3,q}: ceil((q - 2) / 2).
int k3q_euler_genus(int q);

}  // namespace hamsep
