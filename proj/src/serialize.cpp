#include "torelli/serialize.hpp"

#include <algorithm>

#include "torelli/errors.hpp"

namespace torelli {

namespace {

const char* role_name(CurveRole r) {
    switch (r) {
        case CurveRole::Chain: return "chain";
        case CurveRole::Boundary: return "boundary";
        case CurveRole::Probe: return "probe";
        case CurveRole::Dual: return "dual";
    }
    return "?";
}

CurveRole parse_role(const std::string& s) {
    if (s == "chain") return CurveRole::Chain;
    if (s == "boundary") return CurveRole::Boundary;
    if (s == "probe") return CurveRole::Probe;
    if (s == "dual") return CurveRole::Dual;
    throw Error(ErrorCode::MalformedCertificate, "unknown curve role '" + s + "'");
}

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "reference") return Family::Reference;
    throw Error(ErrorCode::MalformedCertificate, "unknown family '" + s + "'");
}

std::vector<std::vector<int>> rotations(const RibbonGraph& g) {
    std::vector<int> first(g.vertex_count(), -1);
    for (int h = 0; h < g.half_edge_count(); ++h)
        if (first[g.vertex(h)] < 0) first[g.vertex(h)] = h;
    std::vector<std::vector<int>> out;
    for (int h : first) out.push_back(h < 0 ? std::vector<int>{} : g.around(h));
    return out;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(to_fraction(*r)) : Json(nullptr); }
Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

template <class T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::MalformedCertificate, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedCertificate, std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Json system_to_json(const CurveSystem& s) {
    Json j;
    j["version"] = kSystemFormatVersion;
    j["kind"] = "curve_system";
    j["surface"] = {{"g", s.surface.genus()},
                    {"n", s.surface.boundary()},
                    {"partition", s.surface.partition().to_string()},
                    {"euler", s.surface.euler()}};
    const auto& p = s.params;
    j["params"] = {{"m", p.m}, {"even_genus", p.even_genus}, {"k", p.k}, {"l", p.l}, {"t", p.t}, {"N_claim", p.N_claim}};

    CellComplex closed = closed_complex(s);
    Json curves = Json::array();
    for (const auto& c : s.curves) {
        Json cj{{"id", c.id}, {"name", c.name}, {"family", family_name(c.family)}, {"role", role_name(c.role)}};
        if (c.role == CurveRole::Chain) cj["crossings"] = c.crossings;
        if (!c.walk.empty()) {
            cj["walk"] = c.walk;
            cj["class"] = closed.coordinates(walk_chain(c.walk, closed.edge_count()));
        }
        if (c.role == CurveRole::Boundary) cj["hole"] = c.hole;
        curves.push_back(cj);
    }
    j["curves"] = curves;
    Json xs = Json::array();
    for (const auto& x : s.crossings) xs.push_back({x.first, x.second, x.sign});
    j["crossings"] = xs;
    Json tri = Json::array();
    for (int c = 0; c < s.curve_count(); ++c)
        for (int d = c + 1; d < s.curve_count(); ++d)
            if (s.intersections[c][d]) tri.push_back({c, d, s.intersections[c][d]});
    j["intersections"] = tri;
    Json holes = Json::array();
    for (auto [label, h] : s.hole_half_edge) holes.push_back({label, h});
    j["ribbon"] = {{"vertices", rotations(s.ribbon.graph)}, {"arcs", s.ribbon.curve_walks}, {"holes", holes}};
    j["chain"] = s.chain;
    std::vector<int> inactive;
    for (int id = 0; id < s.curve_count(); ++id)
        if (!s.active[id]) inactive.push_back(id);
    j["inactive"] = inactive;
    j["delta"] = s.delta;
    j["gamma"] = s.gamma;
    j["beta"] = s.beta;
    j["probe"] = s.probe;
    Json gt = Json::array();
    for (auto [e, sign] : s.gamma_cycle.transverse.crossings) gt.push_back({e, sign});
    Json gc = Json::array();
    for (auto [c, count] : s.gamma_cycle.curve_crossings) gc.push_back({c, count});
    j["gamma_cycle"] = {{"faces", s.gamma_cycle.faces},
                        {"crossings", gt},
                        {"curve_crossings", gc},
                        {"witness_basis", s.gamma_cycle.witness_basis},
                        {"witness_pairing", s.gamma_cycle.witness_pairing}};
    return j;
}

CurveSystem system_from_json(const Json& j) {
    if (field<std::string>(j, "kind") != "curve_system")
        throw Error(ErrorCode::MalformedCertificate, "not a curve system document");
    if (field<int>(j, "version") != kSystemFormatVersion)
        throw Error(ErrorCode::MalformedCertificate, "unsupported system format version");
    const Json& sj = j.at("surface");
    const int g = field<int>(sj, "g"), n = field<int>(sj, "n");
    CurveSystem s(PartitionedSurface(g, n, parse_partition(field<std::string>(sj, "partition"), n)));
    s.params = construction_parameters(g, n);

    for (const auto& cj : field<Json>(j, "curves")) {
        Curve c;
        c.id = field<int>(cj, "id");
        if (c.id != s.curve_count()) throw Error(ErrorCode::MalformedCertificate, "curve ids must be 0..C-1 in order");
        c.name = field<std::string>(cj, "name");
        c.family = parse_family(field<std::string>(cj, "family"));
        c.role = parse_role(field<std::string>(cj, "role"));
        if (cj.contains("crossings")) c.crossings = field<std::vector<int>>(cj, "crossings");
        if (cj.contains("walk")) c.walk = field<std::vector<int>>(cj, "walk");
        if (cj.contains("hole")) c.hole = field<int>(cj, "hole");
        s.curves.push_back(c);
    }
    const int C = s.curve_count();
    auto check_id = [&](int id, bool allow_none) {
        if ((allow_none && id == -1) || (id >= 0 && id < C)) return id;
        throw Error(ErrorCode::MalformedCertificate, "curve id out of range: " + std::to_string(id));
    };
    for (const auto& x : field<Json>(j, "crossings")) {
        auto v = x.get<std::vector<int>>();
        if (v.size() != 3) throw Error(ErrorCode::MalformedCertificate, "crossing needs three entries");
        s.crossings.push_back({check_id(v[0], false), check_id(v[1], false), v[2]});
    }
    s.chain = field<std::vector<int>>(j, "chain");
    std::vector<std::vector<int>> cycles;
    for (int id : s.chain) {
        check_id(id, false);
        if (s.curves[id].role != CurveRole::Chain) throw Error(ErrorCode::MalformedCertificate, "chain lists a non-chain curve");
        if (id != static_cast<int>(cycles.size())) throw Error(ErrorCode::MalformedCertificate, "chain ids must come first in order");
        cycles.push_back(s.curves[id].crossings);
    }
    s.ribbon = build_ribbon(cycles, s.crossings);
    const Json& rj = field<Json>(j, "ribbon");
    if (field<std::vector<std::vector<int>>>(rj, "vertices") != rotations(s.ribbon.graph) ||
        field<std::vector<std::vector<int>>>(rj, "arcs") != s.ribbon.curve_walks)
        throw Error(ErrorCode::MalformedRibbon, "stored rotations disagree with the crossing orders");
    for (const auto& hj : field<Json>(rj, "holes")) {
        auto v = hj.get<std::vector<int>>();
        if (v.size() != 2 || v[1] < 0 || v[1] >= s.ribbon.graph.half_edge_count())
            throw Error(ErrorCode::MalformedRibbon, "bad hole entry");
        s.hole_half_edge[v[0]] = v[1];
    }
    if (static_cast<int>(s.hole_half_edge.size()) != n) throw Error(ErrorCode::MalformedRibbon, "hole count differs from n");
    for (int id : s.chain)
        if (s.curves[id].walk != s.ribbon.curve_walks[id])
            throw Error(ErrorCode::MalformedRibbon, "curve walk disagrees with the ribbon");

    s.active.assign(C, true);
    for (int id : field<std::vector<int>>(j, "inactive")) s.active[check_id(id, false)] = false;
    s.delta = check_id(field<int>(j, "delta"), false);
    s.gamma = check_id(field<int>(j, "gamma"), false);
    s.beta = check_id(field<int>(j, "beta"), true);
    s.probe = check_id(field<int>(j, "probe"), true);
    s.intersections.assign(C, std::vector<int>(C, 0));
    for (const auto& t : field<Json>(j, "intersections")) {
        auto v = t.get<std::vector<int>>();
        if (v.size() != 3) throw Error(ErrorCode::MalformedCertificate, "intersection triple needs three entries");
        check_id(v[0], false);
        check_id(v[1], false);
        s.intersections[v[0]][v[1]] = s.intersections[v[1]][v[0]] = v[2];
    }
    const Json& gj = field<Json>(j, "gamma_cycle");
    s.gamma_cycle.faces = field<std::vector<int>>(gj, "faces");
    for (const auto& x : field<Json>(gj, "crossings")) {
        auto v = x.get<std::vector<int>>();
        s.gamma_cycle.transverse.crossings.emplace_back(v.at(0), v.at(1));
    }
    for (const auto& x : field<Json>(gj, "curve_crossings")) {
        auto v = x.get<std::vector<int>>();
        s.gamma_cycle.curve_crossings[v.at(0)] = v.at(1);
    }
    s.gamma_cycle.witness_basis = field<int>(gj, "witness_basis");
    s.gamma_cycle.witness_pairing = field<std::int64_t>(gj, "witness_pairing");
    return s;
}

Json bound_report_to_json(const BoundReport& r) {
    Json links = Json::array();
    for (size_t i = 0; i < r.links.size(); ++i) {
        Json l{{"label", r.links[i].label}, {"value", optional_rational(r.links[i].value)}};
        if (i < r.steps.size())
            l["relation_to_next"] = {{"relation", r.steps[i].relation}, {"holds", optional_bool(r.steps[i].verdict)}};
        links.push_back(l);
    }
    return {{"g", r.g},
            {"n", r.n},
            {"N", r.N},
            {"certified", to_fraction(r.certified)},
            {"links", links},
            {"chain_final", optional_rational(r.chain_final)},
            {"final_domain_ok", r.final_domain_ok},
            {"end_to_end", optional_bool(r.end_to_end)},
            {"threshold", optional_rational(r.threshold)},
            {"threshold_below_final", optional_bool(r.threshold_below_final)},
            {"all_defined_hold", r.all_defined_hold()}};
}

Json certificate_to_json(const CurveSystem& s, const MappingClass& f, const DistanceCertificate& c) {
    auto name = [&](int id) { return s.curves[id].name; };
    Json j;
    j["version"] = kCertificateFormatVersion;
    j["kind"] = "distance_certificate";
    j["surface"] = {{"g", c.g}, {"n", c.n}, {"partition", c.partition}, {"euler", euler_characteristic(c.g, c.n)}};
    j["params"] = {{"m", c.params.m}, {"even_genus", c.params.even_genus}, {"k", c.params.k},
                   {"l", c.params.l}, {"t", c.params.t}, {"N_claim", c.params.N_claim}};
    j["delta"] = name(c.delta);
    j["gamma"] = name(c.gamma);
    j["N"] = c.N;
    j["bound"] = to_fraction(c.bound);
    Json trace = Json::array();
    for (const auto& step : c.trace) {
        Json names = Json::array();
        for (int id : step) names.push_back(name(id));
        trace.push_back(names);
    }
    j["trace"] = trace;
    Json checks = Json::array();
    for (auto [id, i] : c.terminal_checks) checks.push_back({{"curve", name(id)}, {"intersection", i}});
    j["terminal_disjointness"] = checks;
    j["chain"] = bound_report_to_json(c.chain);

    Json curves = Json::array();
    for (int id : s.chain) curves.push_back({{"name", name(id)}, {"family", family_name(s.curves[id].family)}});
    Json tri = Json::array();
    std::vector<int> ids = s.chain;
    ids.push_back(s.gamma);
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b)
            if (int i = s.intersections[ids[a]][ids[b]]) tri.push_back({name(ids[a]), name(ids[b]), i});
    Json word = Json::array();
    for (const auto& l : f.word) word.push_back({name(l.curve), l.power});
    j["data"] = {{"curves", curves},
                 {"intersections", tri},
                 {"word", word},
                 {"word_order", "rightmost letter acts first"},
                 {"gamma_witness", {{"basis_cycle", s.gamma_cycle.witness_basis},
                                    {"pairing", s.gamma_cycle.witness_pairing}}}};
    j["justification"] =
        "gamma meets no curve in the support of f^N(delta), so it misses a regular neighbourhood of f^N(delta); "
        "gamma pairs nontrivially with a closed-surface cycle, so it is essential; hence d_C(f^N(delta), delta) <= 2 "
        "and the translation length is at most 2/N";
    return j;
}

}  // namespace torelli
