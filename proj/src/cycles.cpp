#include "hamsep/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hamsep {

Cycle::Cycle(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3)
        throw std::invalid_argument("a cycle needs at least three vertices");
    auto least = std::min_element(v_.begin(), v_.end());
    std::rotate(v_.begin(), least, v_.end());
    if (v_.back() < v_[1])
        std::reverse(v_.begin() + 1, v_.end());
}

bool Cycle::contains(Vertex x) const {
    return std::find(v_.begin(), v_.end(), x) != v_.end();
}

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < v_.size(); ++i)
        out.emplace_back(v_[i], v_[(i + 1) % v_.size()]);
    return out;
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
    auto vs = c.vertices();
    std::set<Vertex> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size())
        return false;
    for (Vertex v : vs)
        if (!g.has_vertex(v))
            return false;
    for (const Edge& e : c.edges())
        if (!g.adjacent(e.u, e.v))
            return false;
    return true;
}

namespace {

void extend_cycle(const Graph& g, int k, std::vector<Vertex>& path, std::vector<char>& on_path,
                  std::vector<Cycle>& out) {
    const Vertex anchor = path.front();
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == k) {
        if (path[1] < last && g.adjacent(last, anchor))
            out.emplace_back(path);
        return;
    }
    for (Vertex w : g.neighbors(last)) {
        if (w <= anchor || on_path[w])
            continue;
        on_path[w] = 1;
        path.push_back(w);
        extend_cycle(g, k, path, on_path, out);
        path.pop_back();
        on_path[w] = 0;
    }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int k) {
    if (k < 3 || k > 6)
        throw std::invalid_argument("cycle length must be between 3 and 6");
    std::vector<Cycle> out;
    std::vector<char> on_path(g.order(), 0);
    std::vector<Vertex> path;
    for (Vertex s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend_cycle(g, k, path, on_path, out);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SaturatingPair> saturating_pairs(const Graph& g, std::span<const Vertex> s, int k) {
    if (k != 4 && k != 5)
        throw std::invalid_argument("saturation is defined for 4- and 5-cycles");
    if (!g.is_independent(s))
        throw std::invalid_argument("vertex set is not independent");
    std::vector<char> in_s(g.order(), 0);
    for (Vertex v : s)
        in_s[v] = 1;
    std::map<std::pair<Vertex, Vertex>, Cycle> found;
    if (s.size() >= 2) {
        for (const Cycle& c : enumerate_cycles(g, k)) {
            std::vector<Vertex> hit;
            for (Vertex v : c.vertices())
                if (in_s[v])
                    hit.push_back(v);
            std::sort(hit.begin(), hit.end());
            for (std::size_t i = 0; i < hit.size(); ++i)
                for (std::size_t j = i + 1; j < hit.size(); ++j)
                    found.try_emplace({hit[i], hit[j]}, c);
        }
    }
    std::vector<SaturatingPair> out;
    for (auto& [pair, c] : found)
        out.push_back({pair.first, pair.second, c});
    return out;
}

std::vector<Vertex> vertices_dominating_cycle(const Graph& g, const Cycle& c) {
    if (c.length() != 4 || !is_cycle_of(g, c))
        throw std::invalid_argument("not a 4-cycle of the graph");
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        int hits = 0;
        for (Vertex x : c.vertices())
            hits += g.adjacent(v, x) ? 1 : 0;
        if (hits >= 3)
            out.push_back(v);
    }
    return out;
}

const DiamondSixPattern& diamond_six_pattern() {
    static const DiamondSixPattern pattern = [] {
        std::vector<Edge> edges;
        for (int i = 0; i < 3; ++i) {
            Vertex left = i, right = (i + 1) % 3;
            Vertex a = 3 + 2 * i, b = 4 + 2 * i;
            edges.emplace_back(a, b);
            for (Vertex x : {a, b}) {
                edges.emplace_back(x, left);
                edges.emplace_back(x, right);
            }
        }
        return DiamondSixPattern{Graph(9, edges), {3, 4, 5, 6, 7, 8}};
    }();
    return pattern;
}

namespace {

struct Matcher {
    const Graph& g;
    const DiamondSixPattern& p;
    bool induced;
    std::vector<Vertex> order;  // pattern vertices, each adjacent to an earlier one
    std::vector<Vertex> anchor; // earlier pattern neighbour used to draw candidates
    std::vector<Vertex> image;
    std::vector<char> used;
    std::map<std::pair<std::vector<Vertex>, std::vector<Vertex>>, std::vector<Vertex>> found;

    Matcher(const Graph& graph, const DiamondSixPattern& pattern, bool ind)
        : g(graph), p(pattern), induced(ind), image(pattern.graph.order(), -1), used(graph.order(), 0) {
        const int k = p.graph.order();
        std::vector<char> placed(k, 0);
        order.push_back(0);
        anchor.push_back(-1);
        placed[0] = 1;
        for (std::size_t h = 0; h < order.size(); ++h)
            for (Vertex w : p.graph.neighbors(order[h]))
                if (!placed[w]) {
                    placed[w] = 1;
                    order.push_back(w);
                    anchor.push_back(order[h]);
                }
        if (static_cast<int>(order.size()) != k)
            throw std::invalid_argument("pattern graph must be connected");
    }

    bool consistent(Vertex pv, Vertex gv) const {
        if (used[gv] || g.degree(gv) < p.graph.degree(pv))
            return false;
        for (Vertex q = 0; q < p.graph.order(); ++q) {
            if (image[q] < 0)
                continue;
            bool pe = p.graph.adjacent(pv, q);
            bool ge = g.adjacent(gv, image[q]);
            if (pe && !ge)
                return false;
            if (induced && !pe && ge)
                return false;
        }
        return true;
    }

    void record() {
        std::vector<Vertex> set(image.begin(), image.end());
        std::sort(set.begin(), set.end());
        std::vector<Vertex> crucial;
        for (Vertex c : p.crucial)
            crucial.push_back(image[c]);
        std::sort(crucial.begin(), crucial.end());
        found.try_emplace({std::move(set), std::move(crucial)}, image);
    }

    void extend(std::size_t depth) {
        if (depth == order.size()) {
            record();
            return;
        }
        Vertex pv = order[depth];
        auto try_vertex = [&](Vertex gv) {
            if (!consistent(pv, gv))
                return;
            image[pv] = gv;
            used[gv] = 1;
            extend(depth + 1);
            used[gv] = 0;
            image[pv] = -1;
        };
        if (anchor[depth] < 0) {
            for (Vertex gv = 0; gv < g.order(); ++gv)
                try_vertex(gv);
        } else {
            for (Vertex gv : g.neighbors(image[anchor[depth]]))
                try_vertex(gv);
        }
    }
};

}  // namespace

std::vector<DiamondMatch> find_diamond6(const Graph& g, const DiamondSixPattern& p, bool induced) {
    std::vector<DiamondMatch> out;
    if (g.order() < p.graph.order())
        return out;
    Matcher m(g, p, induced);
    m.extend(0);
    for (auto& [key, image] : m.found)
        out.push_back({image, key.second, key.first});
    return out;
}

std::optional<DiamondSaturation> saturates_diamond6(std::span<const Vertex> s,
                                                    std::span<const DiamondMatch> matches) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (const DiamondMatch& m : matches) {
        std::vector<Vertex> hit;
        std::set_intersection(m.crucial_image.begin(), m.crucial_image.end(), sorted.begin(), sorted.end(),
                              std::back_inserter(hit));
        if (hit.size() >= 3)
            return DiamondSaturation{&m, std::move(hit)};
    }
    return std::nullopt;
}

Sidedness cycle_sidedness(const SignedEmbedding& e, const Cycle& c) {
    if (!is_cycle_of(e.graph(), c))
        throw std::invalid_argument("not a cycle of the embedded graph");
    int product = 1;
    for (const Edge& edge : c.edges())
        product *= e.sign(edge.u, edge.v);
    return product < 0 ? Sidedness::one_sided : Sidedness::two_sided;
}

}  // namespace hamsep
