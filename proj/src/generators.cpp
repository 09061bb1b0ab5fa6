#include "hamsep/generators.hpp"

#include <algorithm>

#include "hamsep/connectivity.hpp"

namespace hamsep {

std::size_t uniform_index(Rng& rng, std::size_t bound) {
    if (bound == 0)
        throw std::invalid_argument("empty range");
    const std::uint64_t span = Rng::max();
    const std::uint64_t limit = span - (span % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return static_cast<std::size_t>(x % bound);
}

namespace {

using Triangle = std::array<Vertex, 3>;

std::vector<Triangle> double_wheel_faces(int n) {
    const int k = n - 2;
    const Vertex x = n - 2, y = n - 1;
    std::vector<Triangle> faces;
    for (int i = 0; i < k; ++i) {
        faces.push_back({i, (i + 1) % k, x});
        faces.push_back({(i + 1) % k, i, y});
    }
    return faces;
}

// Oriented face list of a sphere triangulation with O(1) flips.
class FlipSurface {
  public:
    FlipSurface(int n, std::vector<Triangle> faces)
        : n_(n), faces_(std::move(faces)), face_of_(n * n, -1), adjacent_(n * n, 0) {
        for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
            attach(f);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adjacent_[u * n_ + v])
                    triangles_ += common_neighbours(u, v);
        triangles_ /= 3;
    }

    static FlipSurface from(const SignedEmbedding& e) {
        if (euler_genus(e) != 0)
            throw std::invalid_argument("flips are implemented for sphere triangulations");
        // trace_faces does not orient faces consistently, so walk the darts
        // of the all-positive rotation directly.
        const SignedEmbedding p = e.normalized();
        const int n = p.order();
        std::vector<char> used(n * n, 0);
        std::vector<Triangle> faces;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : p.rotation(u)) {
                if (used[u * n + v])
                    continue;
                std::vector<Vertex> walk;
                Vertex a = u, b = v;
                while (!used[a * n + b]) {
                    used[a * n + b] = 1;
                    walk.push_back(a);
                    Vertex next = p.successor(b, a);
                    a = b;
                    b = next;
                }
                if (walk.size() != 3)
                    throw std::invalid_argument("not a triangulation");
                faces.push_back({walk[0], walk[1], walk[2]});
            }
        return FlipSurface(n, std::move(faces));
    }

    int order() const { return n_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const Triangle& face(int f) const { return faces_[f]; }

    // Returns the new diagonal, or nullopt if the flip would create a
    // multi-edge or raise the triangle count by more than `max_new_triangles`.
    std::optional<Edge> flip(Vertex u, Vertex v, int max_new_triangles = 1 << 30) {
        int f1 = face_of_[u * n_ + v];
        int f2 = face_of_[v * n_ + u];
        if (f1 < 0 || f2 < 0)
            return std::nullopt;
        Vertex a = third(f1, u, v);
        Vertex b = third(f2, v, u);
        if (a == b || adjacent_[a * n_ + b])
            return std::nullopt;
        if (common_neighbours(a, b) - common_neighbours(u, v) > max_new_triangles)
            return std::nullopt;
        triangles_ -= common_neighbours(u, v);
        detach(f1);
        detach(f2);
        faces_[f1] = {u, b, a};
        faces_[f2] = {b, v, a};
        attach(f1);
        attach(f2);
        triangles_ += common_neighbours(a, b);
        return Edge(a, b);
    }

    // With n >= 5, a sphere triangulation is 4-connected iff every triangle bounds a face.
    bool only_facial_triangles() const { return triangles_ == face_count(); }

    SignedEmbedding embedding() const { return embedding_from_faces(n_, faces_); }

    Graph graph() const {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adjacent_[u * n_ + v])
                    edges.emplace_back(u, v);
        return Graph(n_, edges);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adjacent_[u * n_ + v])
                    out.emplace_back(u, v);
        return out;
    }

  private:
    int common_neighbours(Vertex a, Vertex b) const {
        int c = 0;
        for (Vertex w = 0; w < n_; ++w)
            c += adjacent_[a * n_ + w] & adjacent_[b * n_ + w];
        return c;
    }

    Vertex third(int f, Vertex u, Vertex v) const {
        for (Vertex x : faces_[f])
            if (x != u && x != v)
                return x;
        return -1;
    }

    void attach(int f) {
        const auto& t = faces_[f];
        for (int i = 0; i < 3; ++i) {
            Vertex a = t[i], b = t[(i + 1) % 3];
            face_of_[a * n_ + b] = f;
            adjacent_[a * n_ + b] = adjacent_[b * n_ + a] = 1;
        }
    }

    void detach(int f) {
        const auto& t = faces_[f];
        for (int i = 0; i < 3; ++i) {
            Vertex a = t[i], b = t[(i + 1) % 3];
            face_of_[a * n_ + b] = -1;
            if (face_of_[b * n_ + a] < 0)
                adjacent_[a * n_ + b] = adjacent_[b * n_ + a] = 0;
        }
    }

    int n_;
    std::vector<Triangle> faces_;
    std::vector<int> face_of_;       // directed edge -> face
    std::vector<char> adjacent_;
    int triangles_ = 0;
};

int separating_four_cycles(const Graph& g) {
    return static_cast<int>(enumerate_separating_cycles(g, 4).size());
}

}  // namespace

SignedEmbedding double_wheel(int n) {
    if (n < 6)
        throw std::invalid_argument("double wheel needs n >= 6");
    return embedding_from_faces(n, double_wheel_faces(n));
}

SignedEmbedding octahedron() {
    return double_wheel(6);
}

SignedEmbedding icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    std::vector<Triangle> faces;
    for (int i = 0; i < 5; ++i) {
        Vertex u0 = 1 + i, u1 = 1 + (i + 1) % 5;
        Vertex l0 = 6 + i, l1 = 6 + (i + 1) % 5;
        faces.push_back({0, u0, u1});
        faces.push_back({u0, l0, u1});
        faces.push_back({u1, l0, l1});
        faces.push_back({11, l1, l0});
    }
    return embedding_from_faces(12, faces);
}

SignedEmbedding k6_projective() {
    const std::vector<Triangle> faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3},
    };
    return embedding_from_faces(6, faces);
}

std::optional<SignedEmbedding> diagonal_flip(const SignedEmbedding& e, Edge edge) {
    if (!e.graph().adjacent(edge.u, edge.v))
        throw std::invalid_argument("edge " + to_string(edge) + " is not in the graph");
    FlipSurface s = FlipSurface::from(e);
    if (!s.flip(edge.u, edge.v))
        return std::nullopt;
    return s.embedding();
}

namespace {

void random_walk(FlipSurface& s, Rng& rng, int flips, int max_new_triangles = 1 << 30) {
    for (int i = 0; i < flips; ++i) {
        const auto& t = s.face(static_cast<int>(uniform_index(rng, s.face_count())));
        std::size_t corner = uniform_index(rng, 3);
        s.flip(t[corner], t[(corner + 1) % 3], max_new_triangles);
    }
}

FlipSurface random_surface_4c(int n, std::uint64_t seed, int flips, int retry_budget) {
    if (n < 6)
        throw std::invalid_argument("random triangulations start from a double wheel, n >= 6");
    Rng rng(seed);
    FlipSurface s(n, double_wheel_faces(n));
    random_walk(s, rng, flips);
    for (int extra = 0; extra <= retry_budget; ++extra) {
        if (s.only_facial_triangles() && is_k_connected(s.graph(), 4))
            return s;
        // repair phase: never add a triangle
        random_walk(s, rng, 1, 0);
    }
    throw BudgetError("walk found no 4-connected triangulation within " + std::to_string(retry_budget) +
                      " extra flips");
}

}  // namespace

SignedEmbedding random_triangulation_4c(int n, std::uint64_t seed, int flips, int retry_budget) {
    return random_surface_4c(n, seed, flips, retry_budget).embedding();
}

LowSeparatorResult low_separator_family(int n, std::uint64_t seed, int target, const LowSeparatorOptions& options) {
    if (n < 12)
        throw std::invalid_argument("low-separator family needs n >= 12");
    const int walk = options.walk_flips >= 0 ? options.walk_flips : 4 * n;
    int plateau = options.plateau_moves >= 0 ? options.plateau_moves : 4 * n;
    const int max_steps = options.max_steps >= 0 ? options.max_steps : 40 * n;

    FlipSurface s = random_surface_4c(n, seed, walk, 1000000);
    LowSeparatorResult result;
    result.start_cost = separating_four_cycles(s.graph());
    int cost = result.start_cost;
    if (target == kNoTarget) {
        result.embedding = s.embedding();
        result.final_cost = cost;
        return result;
    }
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    Edge last_flipped{-1, -1};
    while (cost > target && result.steps < max_steps) {
        auto edges = s.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        int best = std::numeric_limits<int>::max();
        std::vector<Edge> best_moves;
        for (const Edge& e : edges) {
            FlipSurface trial = s;
            if (!trial.flip(e.u, e.v))
                continue;
            Graph g = trial.graph();
            if (!is_k_connected(g, 4))
                continue;
            int c = separating_four_cycles(g);
            if (c < best) {
                best = c;
                best_moves.assign(1, e);
            } else if (c == best) {
                best_moves.push_back(e);
            }
        }
        if (best_moves.empty() || best > cost)
            break;
        if (best == cost) {
            // sideways move; never undo the previous one
            std::erase_if(best_moves, [&](const Edge& e) { return e == last_flipped; });
            if (plateau <= 0 || best_moves.empty())
                break;
            --plateau;
        }
        const Edge pick = best_moves[uniform_index(rng, best_moves.size())];
        last_flipped = *s.flip(pick.u, pick.v);
        cost = best;
        ++result.steps;
    }
    result.embedding = s.embedding();
    result.final_cost = cost;
    result.reached_target = cost <= target;
    return result;
}

}  // namespace hamsep
