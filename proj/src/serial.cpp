#include "kgh/serial.hpp"

namespace kgh {

namespace {

Json mask_to_list(Mask m) {
    Json out = Json::array();
    for (int e : mask_elements(m)) out.push_back(e);
    return out;
}

Mask mask_from_list(const Json& j, int n) {
    std::vector<int> elems;
    for (const auto& e : j) elems.push_back(e.get<int>());
    return mask_from_elements(elems, n);
}

}  // namespace

Json spec_to_json(const HypergraphSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["r"] = spec.r;
    if (spec.svector) j["svector"] = spec.svector->caps;
    if (spec.partition) {
        Json parts = Json::array();
        for (Mask p : spec.partition->parts) parts.push_back(mask_to_list(p));
        j["partition"] = parts;
    }
    if (spec.stable_s) j["stable_s"] = *spec.stable_s;
    if (spec.wide_t) j["wide_t"] = *spec.wide_t;
    if (spec.avoid_A) j["avoid_A"] = mask_to_list(*spec.avoid_A);
    if (spec.set_system) {
        Json sets = Json::array();
        for (Mask s : *spec.set_system) sets.push_back(mask_to_list(s));
        j["set_system"] = sets;
    }
    return j;
}

HypergraphSpec spec_from_json(const Json& j) {
    HypergraphSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.n = j.at("n").get<int>();
    spec.k = j.value("k", 0);
    spec.r = j.at("r").get<int>();
    if (j.contains("svector"))
        spec.svector = SVector(j["svector"].get<std::vector<int>>(), spec.r);
    if (j.contains("partition")) {
        std::vector<Mask> parts;
        for (const auto& p : j["partition"]) parts.push_back(mask_from_list(p, spec.n));
        spec.partition = Partition(parts, spec.n);
    }
    if (j.contains("stable_s")) spec.stable_s = j["stable_s"].get<int>();
    if (j.contains("wide_t")) spec.wide_t = j["wide_t"].get<int>();
    if (j.contains("avoid_A")) spec.avoid_A = mask_from_list(j["avoid_A"], spec.n);
    if (j.contains("set_system")) {
        std::vector<Mask> sets;
        for (const auto& s : j["set_system"]) sets.push_back(mask_from_list(s, spec.n));
        spec.set_system = std::move(sets);
    }
    spec.validate();
    return spec;
}

Json coloring_to_json(const Coloring& c) { return Json(c.colors); }

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.colors = j.get<std::vector<int>>();
    for (int v : c.colors) {
        if (v < 1) throw std::invalid_argument("colors must be 1-based positive");
        c.m = std::max(c.m, v);
    }
    return c;
}

Json chi_result_to_json(const ChiResult& res) {
    Json j;
    j["chi"] = res.chi;
    j["witness"] = coloring_to_json(res.witness);
    j["nodes"] = res.nodes_explored;
    j["seeded_lower_bound"] = res.lower_bound_used;
    return j;
}

Json mono_support_to_json(const MonoSupport& w, const Hypergraph& hg) {
    Json j;
    j["color"] = w.color;
    j["support"] = w.support;
    Json sets = Json::array();
    for (int v : w.support)
        sets.push_back(mask_to_list(hg.vertices[static_cast<std::size_t>(v)].mask));
    j["sets"] = sets;
    j["multiplicities"] = w.multiplicities;
    return j;
}

Json refute_result_to_json(const RefuteResult& res) {
    Json j;
    switch (res.status) {
        case RefuteStatus::witness: j["status"] = "witness"; break;
        case RefuteStatus::proper: j["status"] = "proper"; break;
        case RefuteStatus::hypothesis_violated: j["status"] = "hypothesis_violated"; break;
    }
    if (res.status != RefuteStatus::witness) return j;
    j["color"] = res.color;
    Json sets = Json::array();
    for (Mask m : res.sets) sets.push_back(mask_to_list(m));
    j["sets"] = sets;
    Json trace;
    trace["k1"] = res.k1;
    Json refinement = Json::array();
    for (Mask p : res.refinement.parts) refinement.push_back(mask_to_list(p));
    trace["refinement"] = refinement;
    Json stage1 = Json::array();
    for (const auto& entry : res.stage_one) {
        Json e;
        e["vertex"] = mask_to_list(entry.vertex);
        Json tuple = Json::array();
        for (Mask m : entry.tuple) tuple.push_back(mask_to_list(m));
        e["tuple"] = tuple;
        e["color"] = entry.color;
        stage1.push_back(e);
    }
    trace["stage_one"] = stage1;
    Json stage2 = Json::array();
    for (Mask m : res.stage_two_edge) stage2.push_back(mask_to_list(m));
    trace["stage_two_edge"] = stage2;
    j["trace"] = trace;
    return j;
}

Json point_config_to_json(const PointConfig& config) {
    Json j;
    j["d"] = config.d;
    Json pts = Json::array();
    for (const auto& p : config.points) {
        Json coords = Json::array();
        for (const Rat& c : p) coords.push_back(c.to_string());
        pts.push_back(coords);
    }
    j["points"] = pts;
    return j;
}

PointConfig point_config_from_json(const Json& j) {
    PointConfig config;
    config.d = j.at("d").get<int>();
    for (const auto& p : j.at("points")) {
        std::vector<Rat> coords;
        for (const auto& c : p) {
            if (c.is_string())
                coords.push_back(Rat::from_string(c.get<std::string>()));
            else
                coords.push_back(Rat(c.get<long long>()));
        }
        config.points.push_back(std::move(coords));
    }
    config.validate();
    return config;
}

Json partition_list_to_json(const std::vector<TverbergPartition>& parts) {
    Json out = Json::array();
    for (const auto& p : parts) {
        Json jp = Json::array();
        for (const auto& block : p.parts) jp.push_back(block);
        out.push_back(jp);
    }
    return out;
}

Json bln_verdict_to_json(const BlnVerdict& verdict) {
    Json j;
    j["verdict"] = verdict.exactly_colorful ? "exactly_colorful" : "mismatch";
    j["extra"] = partition_list_to_json(verdict.extra);
    j["missing"] = partition_list_to_json(verdict.missing);
    return j;
}

}  // namespace kgh
