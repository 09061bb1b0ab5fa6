#include "hamsep/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace hamsep {

namespace {

void rotate_to_least(std::vector<Vertex>& rot, std::vector<int>& sg) {
    if (rot.empty())
        return;
    auto at = std::min_element(rot.begin(), rot.end()) - rot.begin();
    std::rotate(rot.begin(), rot.begin() + at, rot.end());
    std::rotate(sg.begin(), sg.begin() + at, sg.end());
}

}  // namespace

SignedEmbedding::SignedEmbedding(std::vector<std::vector<Vertex>> rotation,
                                 std::vector<std::vector<int>> signs)
    : rotation_(std::move(rotation)), signs_(std::move(signs)) {
    build();
}

SignedEmbedding::SignedEmbedding(std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)) {
    for (const auto& r : rotation_)
        signs_.emplace_back(r.size(), 1);
    build();
}

void SignedEmbedding::build() {
    const int n = static_cast<int>(rotation_.size());
    if (signs_.size() != rotation_.size())
        throw ParseError("sign table does not match rotation");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        if (signs_[v].size() != rotation_[v].size())
            throw ParseError("sign table does not match rotation at vertex " + std::to_string(v));
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            Vertex u = rotation_[v][i];
            if (u < 0 || u >= n)
                throw ParseError("neighbour " + std::to_string(u) + " of vertex " + std::to_string(v) +
                                 " out of range");
            if (u == v)
                throw ParseError("loop at vertex " + std::to_string(v));
            if (signs_[v][i] != 1 && signs_[v][i] != -1)
                throw ParseError("edge sign must be +1 or -1");
            if (v < u)
                edges.emplace_back(v, u);
        }
    }
    try {
        graph_ = Graph(n, edges);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
    for (Vertex v = 0; v < n; ++v) {
        if (graph_.degree(v) != static_cast<int>(rotation_[v].size()))
            throw ParseError("asymmetric adjacency at vertex " + std::to_string(v));
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            Vertex u = rotation_[v][i];
            if (graph_.degree(u) != static_cast<int>(rotation_[u].size()))
                throw ParseError("asymmetric adjacency at vertex " + std::to_string(u));
            auto it = std::find(rotation_[u].begin(), rotation_[u].end(), v);
            if (it == rotation_[u].end())
                throw ParseError("asymmetric adjacency: " + std::to_string(v) + " lists " +
                                 std::to_string(u) + " but not conversely");
            if (signs_[u][it - rotation_[u].begin()] != signs_[v][i])
                throw ParseError("sign mismatch on edge " + to_string(Edge(u, v)));
        }
    }
    if (!graph_.is_connected())
        throw ParseError("graph is not connected");
    for (Vertex v = 0; v < n; ++v)
        rotate_to_least(rotation_[v], signs_[v]);
}

int SignedEmbedding::position(Vertex v, Vertex u) const {
    const auto& r = rotation_[v];
    auto it = std::find(r.begin(), r.end(), u);
    return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

int SignedEmbedding::sign(Vertex u, Vertex v) const {
    int i = position(u, v);
    if (i < 0)
        throw std::invalid_argument("no edge " + to_string(Edge(u, v)));
    return signs_[u][i];
}

bool SignedEmbedding::all_positive() const {
    for (const auto& s : signs_)
        for (int x : s)
            if (x != 1)
                return false;
    return true;
}

Vertex SignedEmbedding::successor(Vertex v, Vertex u) const {
    int i = position(v, u);
    if (i < 0)
        throw std::invalid_argument("no edge " + to_string(Edge(u, v)));
    return rotation_[v][(i + 1) % rotation_[v].size()];
}

Vertex SignedEmbedding::predecessor(Vertex v, Vertex u) const {
    int i = position(v, u);
    if (i < 0)
        throw std::invalid_argument("no edge " + to_string(Edge(u, v)));
    int d = static_cast<int>(rotation_[v].size());
    return rotation_[v][(i + d - 1) % d];
}

SignedEmbedding SignedEmbedding::flipped(Vertex v) const {
    auto rot = rotation_;
    auto sg = signs_;
    std::reverse(rot[v].begin(), rot[v].end());
    std::reverse(sg[v].begin(), sg[v].end());
    for (int& s : sg[v])
        s = -s;
    for (Vertex u : rotation_[v]) {
        int j = position(u, v);
        sg[u][j] = -sg[u][j];
    }
    return SignedEmbedding(std::move(rot), std::move(sg));
}

SignedEmbedding SignedEmbedding::relabeled(std::span<const Vertex> perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::vector<Vertex>> rot(n);
    std::vector<std::vector<int>> sg(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : rotation_[v])
            rot[perm[v]].push_back(perm[u]);
        sg[perm[v]] = signs_[v];
    }
    return SignedEmbedding(std::move(rot), std::move(sg));
}

SignedEmbedding SignedEmbedding::normalized() const {
    const int n = order();
    // flip[v] = product of signs on the tree path from the root
    std::vector<int> flip(n, 0);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (flip[root])
            continue;
        flip[root] = 1;
        queue.assign(1, root);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex v = queue[h];
            for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
                Vertex u = rotation_[v][i];
                if (!flip[u]) {
                    flip[u] = flip[v] * signs_[v][i];
                    queue.push_back(u);
                }
            }
        }
    }
    auto rot = rotation_;
    auto sg = signs_;
    for (Vertex v = 0; v < n; ++v) {
        if (flip[v] < 0)
            std::reverse(rot[v].begin(), rot[v].end());
        for (std::size_t i = 0; i < rot[v].size(); ++i)
            sg[v][i] = flip[v] * flip[rot[v][i]] * sign(v, rot[v][i]);
    }
    return SignedEmbedding(std::move(rot), std::move(sg));
}

SignedEmbedding embedding_from_faces(int n, std::span<const std::array<Vertex, 3>> faces) {
    // link[v]: for each face (v, p, q) in orientation order, the pair (q, p)
    std::vector<std::vector<std::pair<Vertex, Vertex>>> link(n);
    for (const auto& f : faces) {
        for (int k = 0; k < 3; ++k) {
            Vertex v = f[k], p = f[(k + 1) % 3], q = f[(k + 2) % 3];
            if (v < 0 || v >= n || p < 0 || p >= n || q < 0 || q >= n)
                throw ParseError("face vertex out of range");
            if (v == p || p == q || v == q)
                throw ParseError("degenerate face");
            link[v].emplace_back(q, p);
        }
    }
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& lk = link[v];
        if (lk.empty())
            throw ParseError("vertex " + std::to_string(v) + " lies on no face");
        std::map<Vertex, std::vector<Vertex>> around;
        for (auto [a, b] : lk) {
            around[a].push_back(b);
            around[b].push_back(a);
        }
        for (const auto& [u, nb] : around)
            if (nb.size() != 2)
                throw ParseError("link of vertex " + std::to_string(v) + " is not a cycle");
        Vertex prev = lk.front().first;
        Vertex cur = lk.front().second;
        rot[v].push_back(prev);
        while (cur != lk.front().first) {
            rot[v].push_back(cur);
            const auto& nb = around[cur];
            Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
            if (rot[v].size() > around.size())
                throw ParseError("link of vertex " + std::to_string(v) + " is not a cycle");
        }
        if (rot[v].size() != around.size())
            throw ParseError("link of vertex " + std::to_string(v) + " is not a single cycle");
    }
    auto next_of = [&](Vertex v, Vertex u) {
        const auto& r = rot[v];
        auto i = std::find(r.begin(), r.end(), u) - r.begin();
        return r[(i + 1) % r.size()];
    };
    auto prev_of = [&](Vertex v, Vertex u) {
        const auto& r = rot[v];
        auto i = std::find(r.begin(), r.end(), u) - r.begin();
        return r[(i + r.size() - 1) % r.size()];
    };
    std::vector<std::vector<int>> sg(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : rot[v])
            sg[v].push_back(next_of(u, v) == prev_of(v, u) ? 1 : -1);
    return SignedEmbedding(std::move(rot), std::move(sg));
}

std::vector<SignedEmbedding> parse_planar_code(std::string_view bytes) {
    constexpr std::string_view header = ">>planar_code<<";
    std::size_t pos = 0;
    if (bytes.substr(0, header.size()) == header)
        pos = header.size();
    else if (bytes.substr(0, 2) == ">>")
        throw ParseError("unknown header");
    std::vector<SignedEmbedding> out;
    auto byte_at = [&](std::size_t i) { return static_cast<unsigned char>(bytes[i]); };
    while (pos < bytes.size()) {
        const std::size_t record = out.size();
        int n = byte_at(pos++);
        if (n == 0)
            throw ParseError("record " + std::to_string(record) + ": 2-byte planar code is not supported");
        std::vector<std::vector<Vertex>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw ParseError("record " + std::to_string(record) + ": truncated stream");
                int b = byte_at(pos++);
                if (b == 0)
                    break;
                if (b > n)
                    throw ParseError("record " + std::to_string(record) + ": neighbour id " +
                                     std::to_string(b) + " out of range");
                rot[v].push_back(b - 1);
            }
        }
        try {
            out.emplace_back(std::move(rot));
        } catch (const ParseError& ex) {
            throw ParseError("record " + std::to_string(record) + ": " + ex.what());
        }
    }
    return out;
}

std::string serialize_planar_code(std::span<const SignedEmbedding> embeddings) {
    std::string out = ">>planar_code<<";
    for (const auto& e : embeddings) {
        if (e.order() >= 256 || e.order() == 0)
            throw std::invalid_argument("planar code needs 1 <= n < 256");
        if (!e.all_positive())
            throw std::invalid_argument("planar code cannot carry negative edge signs");
        out.push_back(static_cast<char>(e.order()));
        for (Vertex v = 0; v < e.order(); ++v) {
            for (Vertex u : e.rotation(v))
                out.push_back(static_cast<char>(u + 1));
            out.push_back('\0');
        }
    }
    return out;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

}  // namespace

SignedEmbedding parse_signed_rotation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    int lineno = 0;
    std::vector<std::vector<Vertex>> rot;
    std::vector<std::vector<int>> sg;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto toks = tokens_of(line);
        if (toks.empty())
            continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (toks[0] == "n") {
            if (n >= 0)
                fail("repeated vertex count");
            auto count = toks.size() == 2 ? parse_int(toks[1]) : std::nullopt;
            if (!count || *count < 0)
                fail("expected 'n <count>'");
            n = *count;
            rot.assign(n, {});
            sg.assign(n, {});
            seen.assign(n, 0);
        } else if (toks[0] == "v") {
            if (n < 0)
                fail("vertex line before 'n <count>'");
            if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
                fail("expected 'v <id>:'");
            auto id = parse_int(std::string_view(toks[1]).substr(0, toks[1].size() - 1));
            if (!id || *id < 0 || *id >= n)
                fail("vertex id out of range");
            if (seen[*id])
                fail("duplicate line for vertex " + std::to_string(*id));
            seen[*id] = 1;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                std::string_view t = toks[i];
                int s = 1;
                if (!t.empty() && (t.back() == '-' || t.back() == '+')) {
                    s = t.back() == '-' ? -1 : 1;
                    t.remove_suffix(1);
                }
                auto u = parse_int(t);
                if (!u || *u < 0 || *u >= n)
                    fail("bad neighbour '" + toks[i] + "'");
                rot[*id].push_back(*u);
                sg[*id].push_back(s);
            }
        } else {
            fail("unrecognised line");
        }
    }
    if (n < 0)
        throw ParseError("missing 'n <count>' line");
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError("missing line for vertex " + std::to_string(v));
    return SignedEmbedding(std::move(rot), std::move(sg));
}

std::string serialize_signed_rotation(const SignedEmbedding& e) {
    std::ostringstream out;
    out << "n " << e.order() << '\n';
    for (Vertex v = 0; v < e.order(); ++v) {
        out << "v " << v << ':';
        auto rot = e.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            out << ' ' << rot[i];
            if (e.sign_at(v, static_cast<int>(i)) < 0)
                out << '-';
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Face> trace_faces(const SignedEmbedding& e) {
    const int n = e.order();
    // darts are (v, i) with i indexing rotation(v); states add an orientation bit
    std::vector<int> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(e.rotation(v).size());
    std::vector<int> mate(offset[n]);
    for (Vertex v = 0; v < n; ++v) {
        auto rot = e.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i)
            mate[offset[v] + i] = e.position(rot[i], v);
    }
    auto state = [&](Vertex v, int i, int eps) { return 2 * (offset[v] + i) + (eps > 0 ? 0 : 1); };
    auto reverse_state = [&](Vertex v, int i, int eps) {
        Vertex u = e.rotation(v)[i];
        return state(u, mate[offset[v] + i], -eps * e.sign_at(v, i));
    };

    std::vector<char> used(2 * offset[n], 0);
    std::vector<Face> faces;
    for (Vertex v0 = 0; v0 < n; ++v0) {
        for (Vertex u0 : e.graph().neighbors(v0)) {
            int i0 = e.position(v0, u0);
            for (int eps0 : {1, -1}) {
                if (used[state(v0, i0, eps0)])
                    continue;
                Face face;
                Vertex v = v0;
                int i = i0, eps = eps0;
                do {
                    used[state(v, i, eps)] = 1;
                    used[reverse_state(v, i, eps)] = 1;
                    face.boundary.push_back(v);
                    Vertex u = e.rotation(v)[i];
                    int arrive = eps * e.sign_at(v, i);
                    int j = mate[offset[v] + i];
                    int d = static_cast<int>(e.rotation(u).size());
                    i = arrive > 0 ? (j + 1) % d : (j + d - 1) % d;
                    v = u;
                    eps = arrive;
                } while (!(v == v0 && i == i0 && eps == eps0));
                faces.push_back(std::move(face));
            }
        }
    }
    return faces;
}

int euler_characteristic(const SignedEmbedding& e) {
    return e.order() - e.size() + static_cast<int>(trace_faces(e).size());
}

int euler_genus(const SignedEmbedding& e) {
    return 2 - euler_characteristic(e);
}

ValidationReport validate_triangulation(const SignedEmbedding& e) {
    ValidationReport r;
    r.n = e.order();
    r.m = e.size();
    // Simplicity and connectivity are enforced when the embedding is built;
    // they are restated so the report is self-contained.
    r.simple = true;
    r.connected = e.graph().is_connected();
    if (!r.connected)
        r.violations.push_back("graph is not connected");
    auto faces = trace_faces(e);
    r.faces = static_cast<int>(faces.size());
    r.genus = 2 - (r.n - r.m + r.faces);
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const auto& b = faces[k].boundary;
        bool tri = b.size() == 3 && b[0] != b[1] && b[1] != b[2] && b[0] != b[2];
        if (!tri) {
            r.triangular = false;
            r.violations.push_back("non-triangular face #" + std::to_string(k) + " (length " +
                                   std::to_string(b.size()) + ")");
        }
    }
    if (r.genus != 0 && r.genus != 1) {
        r.genus_supported = false;
        r.violations.push_back("Euler genus " + std::to_string(r.genus) +
                               " is neither sphere (0) nor projective plane (1)");
    }
    return r;
}

int require_supported_triangulation(const SignedEmbedding& e) {
    auto r = validate_triangulation(e);
    if (!r.ok())
        throw HypothesisError("not a sphere or projective-plane triangulation: " + r.violations.front());
    return r.genus;
}

int k3q_euler_genus(int q) {
    if (q < 3)
        throw std::invalid_argument("K_{3,q} genus formula needs q >= 3");
    return (q - 2 + 1) / 2;
}

}  // namespace hamsep
