#include "torelli/curve_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "torelli/errors.hpp"
#include "torelli/rational.hpp"

namespace torelli {

ConstructionParameters construction_parameters(int g, int n) {
    if (g < 4 || n < 2)
        throw Error(ErrorCode::DegenerateParameters,
                    "construction needs g >= 4 and n >= 2, got (" + std::to_string(g) + ", " + std::to_string(n) + ")");
    ConstructionParameters p;
    p.g = g;
    p.n = n;
    p.even_genus = g % 2 == 0;
    p.m = p.even_genus ? (g - 2) / 2 : (g - 3) / 2;
    p.k = p.m + (p.m % 2 == 1 ? 1 : 0);  // m + (1 + (-1)^(m+1))/2
    p.l = n - 1 - (n % 2 == 1 ? 1 : 0);  // n - 1 - (1 + (-1)^(n+1))/2
    p.t = 2 * ceil_div(p.k, 4) - 1;
    p.N_claim = ceil_div(p.k, 4) + n / 4;
    return p;
}

const char* family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::Reference: return "reference";
    }
    return "?";
}

Ribbon build_ribbon(const std::vector<std::vector<int>>& cycles, const std::vector<Crossing>& crossings) {
    const int X = static_cast<int>(crossings.size());
    Ribbon r;
    r.slots.assign(X, {-1, -1, -1, -1});
    for (int x = 0; x < X; ++x) r.graph.add_vertex();
    auto role = [&](int x, int curve) {
        if (x < 0 || x >= X) throw Error(ErrorCode::MalformedRibbon, "crossing id out of range");
        if (crossings[x].first == curve) return 0;
        if (crossings[x].second == curve) return 2;
        throw Error(ErrorCode::MalformedRibbon, "curve " + std::to_string(curve) + " listed at a crossing it misses");
    };
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
        const auto& cyc = cycles[c];
        std::vector<int> walk;
        for (size_t j = 0; j < cyc.size(); ++j) {
            int a = cyc[j], b = cyc[(j + 1) % cyc.size()];
            int ra = role(a, c), rb = role(b, c);
            int e = r.graph.add_edge(a, b);
            if (r.slots[a][ra] != -1 || r.slots[b][rb + 1] != -1)
                throw Error(ErrorCode::MalformedRibbon, "crossing visited twice by one curve");
            r.slots[a][ra] = 2 * e;
            r.slots[b][rb + 1] = 2 * e + 1;
            r.edge_curve.push_back(c);
            walk.push_back(2 * e);
        }
        r.curve_walks.push_back(std::move(walk));
    }
    for (int x = 0; x < X; ++x) {
        const auto& s = r.slots[x];
        for (int h : s)
            if (h == -1) throw Error(ErrorCode::MalformedRibbon, "crossing " + std::to_string(x) + " not on both curves");
        if (crossings[x].sign > 0) r.graph.set_rotation({s[0], s[2], s[1], s[3]});
        else r.graph.set_rotation({s[0], s[3], s[1], s[2]});
    }
    r.faces = r.graph.faces();
    return r;
}

namespace {

struct Gadget {
    int m;
    std::vector<int> y_order;
};

// Alternating signs throughout; X runs through crossings 0..m-1.
const Gadget kLens{2, {0, 1}};
const Gadget kGenusOne{6, {0, 1, 4, 5, 2, 3}};
const Gadget kGenusTwo{8, {0, 3, 6, 1, 4, 7, 2, 5}};

struct WrapChoice {
    int jx = -1, jy = -1;
    std::vector<int> residual;  // local half-edges, one per residual bigon, mid-residual first
};

Ribbon gadget_ribbon(const Gadget& gd) {
    std::vector<Crossing> xs;
    for (int j = 0; j < gd.m; ++j) xs.push_back({0, 1, j % 2 == 0 ? 1 : -1});
    std::vector<int> xo(gd.m);
    std::iota(xo.begin(), xo.end(), 0);
    return build_ribbon({xo, gd.y_order}, xs);
}

std::set<int> residual_faces(const Ribbon& r, int jx, int jy) {
    std::set<int> res;
    for (int f = 0; f < static_cast<int>(r.faces.walks.size()); ++f)
        if (r.faces.walks[f].size() == 2) res.insert(f);
    auto drop = [&](int curve, int j) {
        if (j < 0) return;
        int h = r.curve_walks[curve][j];
        res.erase(r.faces.face_of[h]);
        res.erase(r.faces.face_of[h ^ 1]);
    };
    drop(0, jx);
    drop(1, jy);
    return res;
}

WrapChoice choose_wraps(const Gadget& gd, bool need_x, bool need_y) {
    Ribbon r = gadget_ribbon(gd);
    std::set<int> best;
    WrapChoice choice;
    bool have = false;
    for (int jx = need_x ? 0 : -1; jx < (need_x ? gd.m : 0); ++jx) {
        for (int jy = need_y ? 0 : -1; jy < (need_y ? gd.m : 0); ++jy) {
            auto res = residual_faces(r, jx, jy);
            if (!have || res.size() < best.size()) {
                have = true;
                best = res;
                choice.jx = jx;
                choice.jy = jy;
            }
        }
    }
    // Order: faces that also survive in the two-sided configuration first.
    std::set<int> mid_res = best;
    if (!(need_x && need_y)) {
        std::set<int> m2;
        bool have2 = false;
        for (int jx = 0; jx < gd.m; ++jx)
            for (int jy = 0; jy < gd.m; ++jy) {
                auto res = residual_faces(r, jx, jy);
                if (!have2 || res.size() < m2.size()) have2 = true, m2 = res;
            }
        mid_res = m2;
    }
    for (int f : best)
        if (mid_res.count(f)) choice.residual.push_back(r.faces.walks[f][0]);
    for (int f : best)
        if (!mid_res.count(f)) choice.residual.push_back(r.faces.walks[f][0]);
    return choice;
}

struct Layout {
    std::vector<std::string> names;
    std::vector<const Gadget*> links;  // links[i] joins names[i] and names[i+1]
};

Layout chain_layout(const ConstructionParameters& p) {
    Layout L;
    for (int i = p.k; i >= 1; --i) L.names.push_back("a" + std::to_string(i));
    L.names.push_back("c1");
    for (int i = 1; i <= p.l; ++i) L.names.push_back("b" + std::to_string(i));
    for (int i = 0; i < p.k; ++i) L.links.push_back(&kGenusTwo);
    int rest = p.g - 2 * p.k;
    L.links.push_back(rest % 2 == 1 ? &kGenusOne : &kLens);
    for (int i = 1; i < p.l; ++i) L.links.push_back(&kLens);
    if (rest >= 2) {
        L.names.push_back("c2");
        L.names.push_back("a" + std::to_string(p.k + 1));
        L.links.push_back(&kLens);
        L.links.push_back(&kGenusTwo);
    }
    return L;
}

Family family_of(const std::string& name) {
    char kind = name[0];
    int idx = std::stoi(name.substr(1));
    if (kind == 'c') return Family::B;
    return idx % 2 == 1 ? Family::A : Family::B;
}

// Region bookkeeping for the complement of a set of cut edges.
struct RegionData {
    std::vector<int> region_of_face;
    std::vector<Region> regions;
};

template <class Keep>
RegionData regions_where(const CurveSystem& s, Keep keep_edge) {
    const auto& faces = s.ribbon.faces;
    const auto& g = s.ribbon.graph;
    const int F = static_cast<int>(faces.walks.size());
    DisjointSets ds(F);
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep_edge(e)) ds.unite(faces.face_of[2 * e], faces.face_of[2 * e + 1]);
    RegionData rd;
    rd.region_of_face.assign(F, -1);
    std::map<int, int> index;
    for (int f = 0; f < F; ++f) {
        int root = ds.find(f);
        auto it = index.find(root);
        if (it == index.end()) {
            it = index.emplace(root, static_cast<int>(rd.regions.size())).first;
            rd.regions.emplace_back();
        }
        rd.region_of_face[f] = it->second;
        rd.regions[it->second].faces.push_back(f);
    }
    std::map<int, int> hole_of_face;
    for (auto [label, h] : s.hole_half_edge) hole_of_face[faces.face_of[h]] = label;
    for (int f = 0; f < F; ++f) {
        auto& reg = rd.regions[rd.region_of_face[f]];
        auto it = hole_of_face.find(f);
        if (it != hole_of_face.end()) reg.holes.push_back(it->second);
        else reg.euler += 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep_edge(e)) rd.regions[rd.region_of_face[faces.face_of[2 * e]]].euler -= 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool interior = true;
        int h0 = s.ribbon.slots[v][0];
        for (int h : g.around(h0))
            if (!keep_edge(RibbonGraph::edge(h))) interior = false;
        if (interior) rd.regions[rd.region_of_face[faces.face_of[h0]]].euler += 1;
    }
    for (auto& reg : rd.regions) {
        if (reg.euler == 1 && reg.holes.empty()) reg.kind = RegionKind::Disk;
        else if (reg.euler == 0 && reg.holes.size() == 1) reg.kind = RegionKind::BoundaryAnnulus;
        else reg.kind = RegionKind::Other;
    }
    return rd;
}

bool in_list(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

DualCycle find_dual_cycle(const CurveSystem& s, const CellComplex& closed, const std::vector<int>& allowed_curves) {
    const auto& faces = s.ribbon.faces;
    const auto& g = s.ribbon.graph;
    const int F = static_cast<int>(faces.walks.size());
    std::vector<bool> hole(F, false);
    for (auto [label, h] : s.hole_half_edge) hole[faces.face_of[h]] = true;
    std::vector<bool> allowed_edge(g.edge_count(), false);
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = faces.face_of[2 * e], b = faces.face_of[2 * e + 1];
        allowed_edge[e] = in_list(allowed_curves, s.ribbon.edge_curve[e]) && !hole[a] && !hole[b];
    }
    std::vector<std::vector<std::pair<int, int>>> adj(F);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!allowed_edge[e]) continue;
        adj[faces.face_of[2 * e]].emplace_back(faces.face_of[2 * e + 1], e);
        adj[faces.face_of[2 * e + 1]].emplace_back(faces.face_of[2 * e], e);
    }
    std::vector<int> parent_edge(F, -1), depth(F, -1);
    std::vector<bool> tree(g.edge_count(), false);
    for (int root = 0; root < F; ++root) {
        if (depth[root] != -1 || adj[root].empty()) continue;
        depth[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (auto [b, e] : adj[a]) {
                if (depth[b] != -1) continue;
                depth[b] = depth[a] + 1;
                parent_edge[b] = e;
                tree[e] = true;
                q.push_back(b);
            }
        }
    }
    auto other = [&](int f, int e) {
        return faces.face_of[2 * e] == f ? faces.face_of[2 * e + 1] : faces.face_of[2 * e];
    };
    // crossing edge e out of face f: +1 when leaving the tail side
    auto step_sign = [&](int from, int e) { return faces.face_of[2 * e] == from ? 1 : -1; };
    std::vector<Chain> basis;
    for (int i = 0; i < closed.rank(); ++i) basis.push_back(closed.basis_chain(i));
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!allowed_edge[e] || tree[e]) continue;
        int fa = faces.face_of[2 * e], fb = faces.face_of[2 * e + 1];
        // cycle: fa --e--> fb, then tree path fb -> fa
        std::vector<std::pair<int, int>> up_b, up_a;  // (from face, edge)
        int x = fb, y = fa;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                up_b.emplace_back(x, parent_edge[x]);
                x = other(x, parent_edge[x]);
            } else {
                up_a.emplace_back(y, parent_edge[y]);
                y = other(y, parent_edge[y]);
            }
        }
        DualCycle dc;
        dc.faces.push_back(fa);
        dc.transverse.crossings.emplace_back(e, step_sign(fa, e));
        dc.faces.push_back(fb);
        for (auto [f, pe] : up_b) {
            dc.transverse.crossings.emplace_back(pe, step_sign(f, pe));
            dc.faces.push_back(other(f, pe));
        }
        for (auto it = up_a.rbegin(); it != up_a.rend(); ++it) {
            int child = it->first, pe = it->second;
            int par = other(child, pe);
            dc.transverse.crossings.emplace_back(pe, step_sign(par, pe));
            dc.faces.push_back(child);
        }
        dc.faces.pop_back();  // back at fa
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
            std::int64_t p = pairing(basis[i], dc.transverse);
            if (p != 0) {
                dc.witness_basis = i;
                dc.witness_pairing = p;
                for (auto [edge, sign] : dc.transverse.crossings) ++dc.curve_crossings[s.ribbon.edge_curve[edge]];
                return dc;
            }
        }
    }
    return {};
}

}  // namespace

CellComplex closed_complex(const CurveSystem& s) { return CellComplex(s.ribbon.graph); }

const Curve& CurveSystem::curve(int id) const {
    if (id < 0 || id >= curve_count()) throw Error(ErrorCode::UnknownCurve, "curve id " + std::to_string(id));
    return curves[id];
}

int CurveSystem::find(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return c.id;
    throw Error(ErrorCode::UnknownCurve, "no curve named '" + name + "'");
}

std::vector<int> CurveSystem::family(Family f) const {
    std::vector<int> out;
    for (int id : chain)
        if (active[id] && curves[id].family == f) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

int CurveSystem::chain_position(int id) const {
    auto it = std::find(chain.begin(), chain.end(), id);
    if (it == chain.end()) throw Error(ErrorCode::UnknownCurve, "curve " + std::to_string(id) + " not in the chain");
    return static_cast<int>(it - chain.begin());
}

bool CurveSystem::is_hole_face(int face) const {
    for (auto [label, h] : hole_half_edge)
        if (ribbon.faces.face_of[h] == face) return true;
    return false;
}

CurveSystem CurveSystem::without(int id) const {
    curve(id);
    CurveSystem out = *this;
    out.active[id] = false;
    return out;
}

CurveSystem CurveSystem::with_family(int id, Family f) const {
    curve(id);
    CurveSystem out = *this;
    out.curves[id].family = f;
    return out;
}

CurveSystem CurveSystem::with_extra_intersection(int c, int d, int count) const {
    curve(c);
    curve(d);
    CurveSystem out = *this;
    out.intersections[c][d] = out.intersections[d][c] = count;
    return out;
}

CurveSystem build_penner_system(int g, int n) { return build_penner_system(g, n, Partition::maximal(n)); }

CurveSystem build_penner_system(int g, int n, const Partition& p) {
    construction_parameters(g, n);
    return build_penner_system(PartitionedSurface(g, n, p));
}

CurveSystem build_penner_system(const PartitionedSurface& surface) {
    const auto params = construction_parameters(surface.genus(), surface.boundary());
    const int n = params.n;
    CurveSystem s(surface);
    s.params = params;
    Layout layout = chain_layout(params);
    const int L = static_cast<int>(layout.names.size());

    std::vector<Crossing> xs;
    std::vector<std::array<std::vector<int>, 2>> blocks(L);
    struct Pending {
        int offset;
        WrapChoice wrap;
        const Gadget* gadget;
    };
    std::vector<Pending> pending;
    for (int i = 0; i + 1 < L; ++i) {
        const Gadget& gd = *layout.links[i];
        WrapChoice w = choose_wraps(gd, i > 0, i + 1 < L - 1);
        int offset = static_cast<int>(xs.size());
        for (int j = 0; j < gd.m; ++j) xs.push_back({i, i + 1, j % 2 == 0 ? 1 : -1});
        std::vector<int> xc(gd.m), yc = gd.y_order;
        std::iota(xc.begin(), xc.end(), 0);
        if (w.jx >= 0) std::rotate(xc.begin(), xc.begin() + w.jx + 1, xc.end());
        if (w.jy >= 0) std::rotate(yc.begin(), yc.begin() + w.jy + 1, yc.end());
        for (int j : xc) blocks[i][1].push_back(offset + j);
        for (int j : yc) blocks[i + 1][0].push_back(offset + j);
        pending.push_back({offset, w, &gd});
    }
    std::vector<std::vector<int>> cycles;
    for (auto& b : blocks) {
        std::vector<int> cyc = b[0];
        cyc.insert(cyc.end(), b[1].begin(), b[1].end());
        cycles.push_back(cyc);
    }
    s.ribbon = build_ribbon(cycles, xs);
    s.crossings = xs;

    // holes from residual bigons, labelled along the chain
    int label = 0;
    for (const auto& pd : pending) {
        if (pd.wrap.residual.empty()) continue;
        Ribbon local = gadget_ribbon(*pd.gadget);
        for (int lh : pd.wrap.residual) {
            int x = local.graph.vertex(lh);
            int slot = static_cast<int>(std::find(local.slots[x].begin(), local.slots[x].end(), lh) - local.slots[x].begin());
            int gh = s.ribbon.slots[pd.offset + x][slot];
            s.hole_half_edge[++label] = gh;
        }
    }
    if (n % 2 == 1) {
        // extra boundary in the left tail, on a face bounded by the two outermost curves
        const auto& faces = s.ribbon.faces;
        int chosen = -1;
        for (int f = 0; f < static_cast<int>(faces.walks.size()) && chosen < 0; ++f) {
            if (faces.walks[f].size() < 4) continue;
            bool ok = true;
            for (int h : faces.walks[f])
                if (s.ribbon.edge_curve[RibbonGraph::edge(h)] > 1) ok = false;
            if (ok) chosen = f;
        }
        if (chosen < 0) throw Error(ErrorCode::MalformedRibbon, "no face available for the odd boundary");
        s.hole_half_edge[++label] = faces.walks[chosen][0];
    }
    if (label != n) throw Error(ErrorCode::MalformedRibbon, "placed " + std::to_string(label) + " holes, wanted " + std::to_string(n));

    for (int i = 0; i < L; ++i) {
        Curve c;
        c.id = i;
        c.name = layout.names[i];
        c.family = family_of(c.name);
        c.role = CurveRole::Chain;
        c.crossings = cycles[i];
        c.walk = s.ribbon.curve_walks[i];
        s.curves.push_back(c);
        s.chain.push_back(i);
    }
    for (int j = 1; j <= n; ++j) {
        Curve c;
        c.id = s.curve_count();
        c.name = "d" + std::to_string(j);
        c.role = CurveRole::Boundary;
        c.hole = j;
        s.curves.push_back(c);
    }
    if (n % 2 == 1) s.beta = s.find("d" + std::to_string(n));

    CellComplex closed = closed_complex(s);
    {
        Curve c;
        c.id = s.curve_count();
        c.name = "probe";
        c.role = CurveRole::Probe;
        c.walk = closed.basis_walk(0);
        s.probe = c.id;
        s.curves.push_back(c);
    }
    s.delta = s.find("b" + std::to_string(ceil_div(params.l, 2)));

    // gamma: a dual cycle crossing only curves beyond a_t, outermost first
    std::vector<int> allowed;
    for (int i = params.k; i > params.t; --i) {
        allowed.push_back(s.find("a" + std::to_string(i)));
        s.gamma_cycle = find_dual_cycle(s, closed, allowed);
        if (s.gamma_cycle.witness_basis >= 0) break;
    }
    {
        Curve c;
        c.id = s.curve_count();
        c.name = "gamma";
        c.role = CurveRole::Dual;
        s.gamma = c.id;
        s.curves.push_back(c);
    }

    const int C = s.curve_count();
    s.active.assign(C, true);
    s.intersections.assign(C, std::vector<int>(C, 0));
    for (const auto& x : xs) {
        ++s.intersections[x.first][x.second];
        ++s.intersections[x.second][x.first];
    }
    for (auto [cid, count] : s.gamma_cycle.curve_crossings) {
        s.intersections[s.gamma][cid] = count;
        s.intersections[cid][s.gamma] = count;
    }
    return s;
}

int geometric_intersection(const CurveSystem& s, int c, int d) {
    if (s.curve(c).role == CurveRole::Probe || s.curve(d).role == CurveRole::Probe)
        throw Error(ErrorCode::UnknownCurve, "probe curves carry homology data only");
    return s.intersections[c][d];
}

int algebraic_intersection(const CurveSystem& s, int c, int d) {
    s.curve(c);
    s.curve(d);
    int total = 0;
    for (const auto& x : s.crossings) {
        if (x.first == c && x.second == d) total += x.sign;
        if (x.first == d && x.second == c) total -= x.sign;
    }
    return total;
}

std::vector<std::vector<int>> adjacency_graph(const CurveSystem& s) {
    std::vector<std::vector<int>> adj(s.curve_count());
    for (int c : s.chain)
        for (int d : s.chain)
            if (c != d && s.active[c] && s.active[d] && s.intersections[c][d] > 0) adj[c].push_back(d);
    return adj;
}

std::vector<Region> trace_faces(const CurveSystem& s) {
    auto rd = regions_where(s, [&](int e) { return !s.active[s.ribbon.edge_curve[e]]; });
    return rd.regions;
}

bool check_filling(const CurveSystem& s) {
    for (const auto& r : trace_faces(s))
        if (r.kind == RegionKind::Other) return false;
    return true;
}

bool check_family_disjointness(const CurveSystem& s) {
    for (int c : s.chain)
        for (int d : s.chain) {
            if (c >= d || !s.active[c] || !s.active[d]) continue;
            if (s.curves[c].family == Family::Reference || s.curves[d].family == Family::Reference) return false;
            if (s.curves[c].family == s.curves[d].family && s.intersections[c][d] != 0) return false;
        }
    return true;
}

ValidationReport validate_system(const CurveSystem& s) {
    ValidationReport r;
    auto fail = [&](const std::string& why) { r.failures.push_back(why); };
    r.filling = check_filling(s);
    if (!r.filling) fail("complement has a region that is neither a disk nor a boundary annulus");
    r.family_disjoint = check_family_disjointness(s);
    if (!r.family_disjoint) fail("two curves of one family intersect");

    r.parity = true;
    for (int c : s.chain)
        for (int d : s.chain)
            if (c < d && (s.intersections[c][d] % 2 != 0 || algebraic_intersection(s, c, d) != 0)) {
                r.parity = false;
                fail("parity audit failed for " + s.curves[c].name + ", " + s.curves[d].name);
            }

    const auto& g = s.ribbon.graph;
    const auto& faces = s.ribbon.faces;
    {
        int V = 0, E = 0;
        std::vector<int> on_active(s.curve_count(), 0);
        for (const auto& x : s.crossings)
            if (s.active[x.first] && s.active[x.second]) ++V, ++on_active[x.first], ++on_active[x.second];
        for (int c : s.chain)
            if (s.active[c]) E += std::max(on_active[c], 1), V += on_active[c] == 0 ? 1 : 0;
        int sum = 0;
        for (const auto& reg : trace_faces(s)) sum += reg.euler;
        r.euler_balance = V - E + sum == s.surface.euler();
        if (!r.euler_balance) fail("Euler count does not balance");
    }
    {
        int V = g.vertex_count(), E = g.edge_count(), F = static_cast<int>(faces.walks.size());
        int chi = V - E + F;
        r.genus_matches = (2 - chi) == 2 * s.params.g && static_cast<int>(s.hole_half_edge.size()) == s.params.n;
        if (!r.genus_matches) fail("ribbon genus or hole count is off");
    }
    r.minimal_position = true;
    for (int f = 0; f < static_cast<int>(faces.walks.size()); ++f)
        if (faces.walks[f].size() <= 2 && !s.is_hole_face(f)) {
            r.minimal_position = false;
            fail("bigon face " + std::to_string(f));
        }
    r.separating = r.essential = true;
    for (int c : s.chain) {
        auto rd = regions_where(s, [&](int e) { return s.ribbon.edge_curve[e] != c; });
        if (rd.regions.size() != 2) {
            r.separating = false;
            fail(s.curves[c].name + " does not separate");
            continue;
        }
        for (const auto& reg : rd.regions)
            if (reg.euler > -1) {
                r.essential = false;
                fail(s.curves[c].name + " bounds a disk or a boundary-parallel annulus");
            }
    }
    r.non_isotopic = true;
    for (int c : s.chain)
        for (int d : s.chain) {
            if (c >= d || s.intersections[c][d] != 0) continue;
            auto rd = regions_where(s, [&](int e) { int o = s.ribbon.edge_curve[e]; return o != c && o != d; });
            for (int ri = 0; ri < static_cast<int>(rd.regions.size()); ++ri) {
                const auto& reg = rd.regions[ri];
                if (reg.euler != 0 || !reg.holes.empty()) continue;
                bool touch_c = false, touch_d = false;
                for (int e = 0; e < g.edge_count(); ++e) {
                    int o = s.ribbon.edge_curve[e];
                    bool here = rd.region_of_face[faces.face_of[2 * e]] == ri || rd.region_of_face[faces.face_of[2 * e + 1]] == ri;
                    if (here && o == c) touch_c = true;
                    if (here && o == d) touch_d = true;
                }
                if (touch_c && touch_d) {
                    r.non_isotopic = false;
                    fail(s.curves[c].name + " and " + s.curves[d].name + " cobound an annulus");
                }
            }
        }
    r.gamma_ok = s.gamma_cycle.witness_basis >= 0;
    if (r.gamma_ok) {
        int left = s.chain_position(s.find("a" + std::to_string(s.params.t)));
        for (int i = left; i < static_cast<int>(s.chain.size()); ++i)
            if (s.intersections[s.gamma][s.chain[i]] != 0) r.gamma_ok = false;
    }
    if (!r.gamma_ok) fail("no essential gamma disjoint from the terminal window");
    return r;
}

}  // namespace torelli
