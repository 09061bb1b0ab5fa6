#include "hamsep/report_json.hpp"

namespace hamsep {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges)
        out.push_back({e.u, e.v});
    return out;
}

}  // namespace

json to_json(const ValidationReport& r) {
    return {
        {"n", r.n},
        {"m", r.m},
        {"faces", r.faces},
        {"genus", r.genus},
        {"simple", r.simple},
        {"connected", r.connected},
        {"triangular", r.triangular},
        {"genus_supported", r.genus_supported},
        {"violations", r.violations},
        {"ok", r.ok()},
    };
}

json to_json(const ConditionReport& r) {
    json checks = json::array();
    for (const ConditionCheck& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
    return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

json to_json(const Lemma7Report& r) {
    json bad = json::array();
    for (const Lemma7Counterexample& c : r.counterexamples) {
        json item = {{"f", edges_json(c.f)}, {"four_connected", c.four_connected}};
        if (c.hamiltonian_checked)
            item["hamiltonian"] = c.hamiltonian;
        bad.push_back(item);
    }
    return {
        {"checked", r.checked},
        {"hamiltonian_checked", r.hamiltonian_checked},
        {"counterexamples", bad},
    };
}

json to_json(const WitnessReport& r) {
    json stages = json::array();
    for (const StageRecord& s : r.stages)
        stages.push_back({
            {"name", s.name},
            {"size", s.vertices.size()},
            {"floor", s.floor},
            {"floor_holds", s.floor_holds},
            {"vertices", s.vertices},
        });
    json out = {
        {"schema", kJsonSchema},
        {"n", r.n},
        {"m", r.m},
        {"genus", r.genus},
        {"c", std::to_string(r.c.num) + "/" + std::to_string(r.c.den)},
        {"separators", {{"total", r.separators_total}, {"minimal", r.separators_minimal}}},
        {"separating_3_cycles", r.separating_3_cycles},
        {"separating_4_cycles", r.separating_4_cycles},
        {"threshold", r.c_threshold_ok ? "ok" : "violated"},
        {"s3_floor_asymptotic", r.asymptotic_s3_floor},
        {"stage3_max_removed_per_cycle", r.stage3_max_removed_per_cycle},
        {"conflict_degeneracy", r.conflict_degeneracy},
        {"diamond_matches", r.diamond_matches},
        {"diamond_ratio", r.diamond_ratio ? json(*r.diamond_ratio) : json(nullptr)},
        {"stages", stages},
        {"floors_hold", r.floors_hold()},
        {"final_size", r.final_set().size()},
        {"final_empty", r.final_set().empty()},
        {"conditions", to_json(r.conditions)},
    };
    if (r.lemma7) {
        out["edge_choices"] = to_json(*r.lemma7);
        out["edge_choices"]["exhaustive"] = r.lemma7_exhaustive;
    } else {
        out["edge_choices"] = nullptr;
    }
    return out;
}

}  // namespace hamsep
