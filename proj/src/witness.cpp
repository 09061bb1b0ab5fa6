#include "hamsep/witness.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "hamsep/generators.hpp"
#include "hamsep/hamilton.hpp"

namespace hamsep {

namespace {

std::string describe(const Cycle& c) {
    std::string out = "cycle";
    for (Vertex v : c.vertices())
        out += " " + std::to_string(v);
    return out;
}

VertexSet sorted_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Pairs of s on a common k-cycle, without the independence precondition.
std::map<std::pair<Vertex, Vertex>, Cycle> pairs_on_cycles(const Graph& g, const VertexSet& s, int k) {
    std::vector<char> in_s(g.order(), 0);
    for (Vertex v : s)
        in_s[v] = 1;
    std::map<std::pair<Vertex, Vertex>, Cycle> found;
    if (s.size() < 2)
        return found;
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
    return found;
}

std::optional<Cycle> saturated_separating_cycle(const Graph& g, const VertexSet& s) {
    for (const Cycle& c : enumerate_separating_cycles(g, 4)) {
        int hits = 0;
        for (Vertex v : c.vertices())
            hits += std::binary_search(s.begin(), s.end(), v) ? 1 : 0;
        if (hits >= 2)
            return c;
    }
    return std::nullopt;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational { throw std::invalid_argument("cannot parse rational '" + text + "'"); };
    auto to_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || s.empty())
            fail();
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Rational r{to_int(std::string_view(text).substr(0, slash)), to_int(std::string_view(text).substr(slash + 1))};
        if (r.den <= 0)
            fail();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return {to_int(text), 1};
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t decimals = text.size() - dot - 1;
    if (decimals > 15)
        fail();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < decimals; ++i)
        den *= 10;
    return {to_int(digits), den};
}

std::int64_t four_cycle_divisor(int sigma) {
    return 15 * (10 * static_cast<std::int64_t>(sigma) + 1) + 1;
}

std::int64_t five_cycle_divisor(int sigma) {
    return 2 * 15 * (40 * static_cast<std::int64_t>(sigma) + 1) + 1;
}

std::string to_string(SaturationKind kind) {
    switch (kind) {
    case SaturationKind::four_cycle:
        return "4-cycle";
    case SaturationKind::five_cycle:
        return "5-cycle";
    case SaturationKind::diamond6:
        return "diamond-6-cycle";
    }
    return "?";
}

VertexSet stage1_low_degree(const Graph& g) {
    if (g.min_degree() < 4)
        throw HypothesisError("minimum degree " + std::to_string(g.min_degree()) + " < 4");
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 6)
            out.push_back(v);
    return out;
}

std::vector<Vertex> smallest_last_order(int n, const std::vector<std::vector<int>>& adjacency, int* degeneracy) {
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adjacency[v].size());
        queue.emplace(deg[v], v);
    }
    std::vector<Vertex> order;
    int worst = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        worst = std::max(worst, d);
        gone[v] = 1;
        order.push_back(v);
        for (int w : adjacency[v])
            if (!gone[w]) {
                queue.erase({deg[w], w});
                queue.emplace(--deg[w], w);
            }
    }
    if (degeneracy)
        *degeneracy = worst;
    return order;
}

VertexSet stage2_independent(const Graph& g, const VertexSet& s1) {
    if (s1.empty())
        throw std::invalid_argument("stage 2 needs a nonempty S1");
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (Vertex v = 0; v < n; ++v)
        adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    auto order = smallest_last_order(n, adj, nullptr);
    std::vector<int> colour(n, -1);
    int colours = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<char> taken(n + 1, 0);
        for (Vertex w : g.neighbors(*it))
            if (colour[w] >= 0)
                taken[colour[w]] = 1;
        int c = 0;
        while (taken[c])
            ++c;
        colour[*it] = c;
        colours = std::max(colours, c + 1);
    }
    if (colours > 6)
        throw std::logic_error("greedy colouring used " + std::to_string(colours) +
                               " colours on a graph that should be 5-degenerate");
    std::vector<VertexSet> classes(colours);
    for (Vertex v : s1)
        classes[colour[v]].push_back(v);
    std::size_t best = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].size() > classes[best].size())
            best = c;
    return sorted_set(classes[best]);
}

Stage3Result stage3_prune_separating(const Graph& g, const VertexSet& s2, const std::vector<Cycle>& separating4) {
    if (!g.is_independent(s2))
        throw std::invalid_argument("stage 3 needs an independent set");
    std::vector<char> drop(g.order(), 0);
    Stage3Result r;
    for (const Cycle& c : separating4) {
        std::vector<Vertex> bad = vertices_dominating_cycle(g, c);
        bad.insert(bad.end(), c.vertices().begin(), c.vertices().end());
        int removed = 0;
        for (Vertex v : sorted_set(bad))
            if (std::binary_search(s2.begin(), s2.end(), v)) {
                ++removed;
                drop[v] = 1;
            }
        r.max_removed_per_cycle = std::max(r.max_removed_per_cycle, removed);
    }
    for (Vertex v : s2)
        if (!drop[v])
            r.kept.push_back(v);
    return r;
}

ConflictGraph build_conflict_graph(const Graph& g, const VertexSet& s, SaturationKind kind,
                                   const std::vector<DiamondMatch>* diamonds) {
    ConflictGraph h;
    h.vertices = s;
    std::set<Edge> edges;
    if (kind == SaturationKind::diamond6) {
        std::vector<DiamondMatch> local;
        if (!diamonds) {
            local = find_diamond6(g, diamond_six_pattern());
            diamonds = &local;
        }
        for (const DiamondMatch& m : *diamonds) {
            std::vector<Vertex> hit;
            std::set_intersection(m.crucial_image.begin(), m.crucial_image.end(), s.begin(), s.end(),
                                  std::back_inserter(hit));
            if (hit.size() < 3)
                continue;
            for (std::size_t i = 0; i < hit.size(); ++i)
                for (std::size_t j = i + 1; j < hit.size(); ++j)
                    edges.emplace(hit[i], hit[j]);
        }
    } else {
        for (const SaturatingPair& p : saturating_pairs(g, s, kind == SaturationKind::four_cycle ? 4 : 5))
            edges.emplace(p.a, p.b);
    }
    h.edges.assign(edges.begin(), edges.end());
    std::vector<std::vector<int>> adj(s.size());
    auto index = [&](Vertex v) { return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin()); };
    for (const Edge& e : h.edges) {
        adj[index(e.u)].push_back(index(e.v));
        adj[index(e.v)].push_back(index(e.u));
    }
    smallest_last_order(static_cast<int>(s.size()), adj, &h.degeneracy);
    return h;
}

RefinementResult refine_no_saturation(const Graph& g, const VertexSet& s_in, SaturationKind kind, int sigma,
                                      const std::vector<DiamondMatch>* diamonds) {
    if (sigma != 0 && sigma != 1)
        throw HypothesisError("refinements are implemented for Euler genus 0 and 1");
    VertexSet s = sorted_set(s_in);
    if (!g.is_independent(s))
        throw HypothesisError("refinement needs an independent set");
    for (Vertex v : s)
        if (g.degree(v) > 6)
            throw HypothesisError("vertex " + std::to_string(v) + " has degree > 6");
    if (kind == SaturationKind::four_cycle) {
        if (auto c = saturated_separating_cycle(g, s))
            throw HypothesisError("set saturates separating " + describe(*c));
    } else {
        auto pairs = pairs_on_cycles(g, s, 4);
        if (!pairs.empty())
            throw HypothesisError("set saturates 4-" + describe(pairs.begin()->second));
    }

    RefinementResult r;
    r.conflicts = build_conflict_graph(g, s, kind, diamonds);
    const int k = static_cast<int>(s.size());
    std::vector<std::vector<int>> adj(k);
    auto index = [&](Vertex v) { return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin()); };
    for (const Edge& e : r.conflicts.edges) {
        adj[index(e.u)].push_back(index(e.v));
        adj[index(e.v)].push_back(index(e.u));
    }
    std::vector<char> blocked(k, 0);
    for (int i : smallest_last_order(k, adj, nullptr)) {
        if (blocked[i])
            continue;
        r.kept.push_back(s[i]);
        for (int j : adj[i])
            blocked[j] = 1;
    }
    r.kept = sorted_set(r.kept);

    bool clean = true;
    if (kind == SaturationKind::diamond6) {
        std::vector<DiamondMatch> local;
        if (!diamonds) {
            local = find_diamond6(g, diamond_six_pattern());
            diamonds = &local;
        }
        clean = !saturates_diamond6(r.kept, *diamonds);
    } else {
        clean = pairs_on_cycles(g, r.kept, kind == SaturationKind::four_cycle ? 4 : 5).empty();
    }
    if (!clean)
        throw std::logic_error("refined set still saturates a " + to_string(kind));
    return r;
}

bool ConditionReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.passed; });
}

ConditionReport verify_conditions(const Graph& g, const SignedEmbedding& e, const VertexSet& s_in) {
    (void)e;
    VertexSet s = sorted_set(s_in);
    ConditionReport report;
    auto add = [&](std::string name) -> ConditionCheck& {
        report.checks.push_back({std::move(name), true, {}});
        return report.checks.back();
    };
    auto fail = [](ConditionCheck& c, std::string w) {
        c.passed = false;
        c.witnesses.push_back(std::move(w));
    };

    auto& deg = add("(i) degree at most 6");
    for (Vertex v : s)
        if (g.degree(v) > 6)
            fail(deg, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

    auto& indep = add("(ii) independent");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                fail(indep, "edge " + to_string(Edge(s[i], s[j])));

    const auto separating = enumerate_separating_cycles(g, 4);
    auto& on_cycle = add("(iii) not on a separating 4-cycle");
    auto& sees_three = add("(iv) not adjacent to three vertices of a separating 4-cycle");
    for (const Cycle& c : separating) {
        for (Vertex v : c.vertices())
            if (std::binary_search(s.begin(), s.end(), v))
                fail(on_cycle, "vertex " + std::to_string(v) + " on separating " + describe(c));
        for (Vertex v : vertices_dominating_cycle(g, c))
            if (std::binary_search(s.begin(), s.end(), v))
                fail(sees_three, "vertex " + std::to_string(v) + " sees three vertices of separating " + describe(c));
    }

    auto& sat = add("(v) saturates no 4-, 5- or diamond-6-cycle");
    for (int k : {4, 5})
        for (const auto& [pair, c] : pairs_on_cycles(g, s, k))
            fail(sat, "vertices " + std::to_string(pair.first) + "," + std::to_string(pair.second) + " on " +
                          std::to_string(k) + "-" + describe(c));
    if (s.size() >= 3) {
        auto matches = find_diamond6(g, diamond_six_pattern());
        for (const DiamondMatch& m : matches) {
            std::vector<Vertex> hit;
            std::set_intersection(m.crucial_image.begin(), m.crucial_image.end(), s.begin(), s.end(),
                                  std::back_inserter(hit));
            if (hit.size() >= 3) {
                std::string w = "diamond-6-cycle on";
                for (Vertex v : m.image_set)
                    w += " " + std::to_string(v);
                w += " with crucial vertices in S:";
                for (Vertex v : hit)
                    w += " " + std::to_string(v);
                fail(sat, std::move(w));
            }
        }
    }
    return report;
}

ConditionReport verify_conditions(const SignedEmbedding& e, const VertexSet& s) {
    return verify_conditions(e.graph(), e, s);
}

EdgeChoiceStream::EdgeChoiceStream(const Graph& g, const VertexSet& s, std::uint64_t budget, std::uint64_t seed)
    : s_(sorted_set(s)) {
    if (s_.empty())
        throw std::invalid_argument("edge choices need a nonempty S");
    for (Vertex v : s_) {
        std::vector<Edge> inc;
        for (Vertex w : g.neighbors(v))
            inc.emplace_back(v, w);
        if (inc.empty())
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no incident edge");
        options_.push_back(std::move(inc));
        if (__builtin_mul_overflow(product_, static_cast<std::uint64_t>(options_.back().size()), &product_))
            product_ = UINT64_MAX;
    }
    exhaustive_ = product_ <= budget;
    if (exhaustive_) {
        planned_ = product_;
        digits_.assign(s_.size(), 0);
        return;
    }
    planned_ = budget;
    Rng rng(seed);
    std::set<std::vector<int>> seen;
    while (samples_.size() < budget) {
        std::vector<int> d(s_.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = static_cast<int>(uniform_index(rng, options_[i].size()));
        if (seen.insert(d).second)
            samples_.push_back(std::move(d));
    }
}

EdgeChoiceSet EdgeChoiceStream::make(const std::vector<int>& digits) const {
    EdgeChoiceSet out;
    for (std::size_t i = 0; i < s_.size(); ++i) {
        const Edge& e = options_[i][digits[i]];
        out.assignment.emplace_back(s_[i], e);
        out.f.push_back(e);
    }
    std::sort(out.f.begin(), out.f.end());
    return out;
}

std::optional<EdgeChoiceSet> EdgeChoiceStream::next() {
    if (emitted_ >= planned_)
        return std::nullopt;
    if (!exhaustive_)
        return make(samples_[emitted_++]);
    EdgeChoiceSet out = make(digits_);
    ++emitted_;
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < static_cast<int>(options_[i].size()))
            break;
        digits_[i] = 0;
    }
    return out;
}

std::vector<EdgeChoiceSet> enumerate_edge_choices(const Graph& g, const VertexSet& s, std::uint64_t budget,
                                                  std::uint64_t seed) {
    EdgeChoiceStream stream(g, s, budget, seed);
    std::vector<EdgeChoiceSet> out;
    while (auto c = stream.next())
        out.push_back(std::move(*c));
    return out;
}

namespace {

void check_one(const Graph& g, const EdgeChoiceSet& choice, bool check_hamiltonicity, Lemma7Report& report) {
    Graph rest = g.without_edges(choice.f);
    Lemma7Counterexample ce;
    ce.f = choice.f;
    ce.four_connected = is_k_connected(rest, 4);
    bool ok = ce.four_connected;
    if (check_hamiltonicity) {
        ce.hamiltonian_checked = true;
        ce.hamiltonian = is_hamiltonian(rest).hamiltonian;
        ++report.hamiltonian_checked;
        ok = ok && ce.hamiltonian;
    }
    ++report.checked;
    if (!ok)
        report.counterexamples.push_back(std::move(ce));
}

}  // namespace

Lemma7Report check_lemma7(const Graph& g, const std::vector<EdgeChoiceSet>& choices, bool check_hamiltonicity) {
    Lemma7Report report;
    for (const EdgeChoiceSet& c : choices)
        check_one(g, c, check_hamiltonicity, report);
    return report;
}

Lemma7Report check_lemma7(const Graph& g, EdgeChoiceStream& choices, bool check_hamiltonicity) {
    Lemma7Report report;
    while (auto c = choices.next())
        check_one(g, *c, check_hamiltonicity, report);
    return report;
}

bool WitnessReport::floors_hold() const {
    return std::all_of(stages.begin(), stages.end(), [](const StageRecord& s) { return s.floor_holds; });
}

WitnessReport run_pipeline(const SignedEmbedding& e, Rational c) {
    if (c.den <= 0 || c.num < 0 || c.num * 324 >= c.den)
        throw std::invalid_argument("the separator constant c must satisfy 0 <= c < 1/324");
    WitnessReport r;
    r.genus = require_supported_triangulation(e);
    const Graph& g = e.graph();
    if (!is_k_connected(g, 4))
        throw HypothesisError("triangulation is not 4-connected");
    r.n = g.order();
    r.m = g.size();
    r.c = c;

    SeparatorSet seps = enumerate_4_separators(g);
    r.separators_total = seps.total();
    r.separators_minimal = seps.minimal;
    r.separating_3_cycles = static_cast<int>(enumerate_separating_cycles(g, 3).size());
    const auto separating4 = enumerate_separating_cycles(g, 4);
    r.separating_4_cycles = static_cast<int>(separating4.size());
    r.c_threshold_ok = static_cast<std::int64_t>(r.separators_total) * c.den <= c.num * r.n;
    r.asymptotic_s3_floor = r.n / 18.0 - 18.0 * c.value() * r.n;

    auto stage = [&](std::string name, VertexSet vs, double floor, bool holds) {
        r.stages.push_back({std::move(name), std::move(vs), floor, holds});
    };
    const std::int64_t n = r.n;

    VertexSet s1 = stage1_low_degree(g);
    const auto k1 = static_cast<std::int64_t>(s1.size());
    stage("S1", s1, n / 3.0, 3 * k1 >= n);

    VertexSet s2 = stage2_independent(g, s1);
    const auto k2 = static_cast<std::int64_t>(s2.size());
    stage("S2", s2, k1 / 6.0, 6 * k2 >= k1);

    Stage3Result s3 = stage3_prune_separating(g, s2, separating4);
    r.stage3_max_removed_per_cycle = s3.max_removed_per_cycle;
    const auto k3 = static_cast<std::int64_t>(s3.kept.size());
    const std::int64_t floor3 = k2 - 18 * static_cast<std::int64_t>(r.separating_4_cycles);
    stage("S3", s3.kept, static_cast<double>(floor3), k3 >= floor3 && s3.max_removed_per_cycle <= 18);

    auto s4 = refine_no_saturation(g, s3.kept, SaturationKind::four_cycle, r.genus);
    const auto c4 = four_cycle_divisor(r.genus);
    const auto k4 = static_cast<std::int64_t>(s4.kept.size());
    stage("S4", s4.kept, static_cast<double>(k3) / c4, c4 * k4 >= k3);

    auto s5 = refine_no_saturation(g, s4.kept, SaturationKind::five_cycle, r.genus);
    const auto c5 = five_cycle_divisor(r.genus);
    const auto k5 = static_cast<std::int64_t>(s5.kept.size());
    stage("S5", s5.kept, static_cast<double>(k4) / c5, c5 * k5 >= k4);

    const auto diamonds = find_diamond6(g, diamond_six_pattern());
    r.diamond_matches = static_cast<int>(diamonds.size());
    auto s6 = refine_no_saturation(g, s5.kept, SaturationKind::diamond6, r.genus, &diamonds);
    if (k5 > 0)
        r.diamond_ratio = static_cast<double>(s6.kept.size()) / static_cast<double>(k5);
    stage("S6", s6.kept, 0.0, true);

    r.conflict_degeneracy = {s4.conflicts.degeneracy, s5.conflicts.degeneracy, s6.conflicts.degeneracy};
    r.conditions = verify_conditions(g, e, r.final_set());
    return r;
}

void attach_lemma7(WitnessReport& report, const SignedEmbedding& e, std::uint64_t budget, std::uint64_t seed,
                   bool check_hamiltonicity) {
    if (report.final_set().empty()) {
        report.lemma7 = Lemma7Report{};
        report.lemma7_exhaustive = true;
        return;
    }
    EdgeChoiceStream stream(e.graph(), report.final_set(), budget, seed);
    report.lemma7_exhaustive = stream.exhaustive();
    report.lemma7 = check_lemma7(e.graph(), stream, check_hamiltonicity);
}

}  // namespace hamsep
