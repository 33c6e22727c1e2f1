#include "torelli/homology.hpp"

#include <algorithm>
#include <deque>

#include "torelli/errors.hpp"

namespace torelli {

MappingClass MappingClass::inverse() const {
    MappingClass inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv.word.push_back({it->curve, -it->power});
    return inv;
}

MappingClass MappingClass::then(const MappingClass& after) const {
    MappingClass out = after;
    out.word.insert(out.word.end(), word.begin(), word.end());
    return out;
}

namespace {

struct Marked {
    RibbonGraph graph;
    std::vector<int> loop_head;  // per label
    std::vector<int> vertex;     // per label
};

// A marked point in each hole joined to a corner of the hole face by a spoke,
// and a loop around it; the loop's inside is the hole.
Marked mark_boundaries(const RibbonGraph& r, const std::map<int, int>& holes) {
    Marked m{r, {}, {}};
    for (auto [label, h] : holes) {
        int q = -1;
        int spoke = m.graph.insert_edge_to_new_vertex(RibbonGraph::twin(h), q);
        int loop = m.graph.add_edge(q, q);
        m.graph.set_rotation({2 * spoke + 1, 2 * loop, 2 * loop + 1});
        m.loop_head.push_back(2 * loop + 1);
        m.vertex.push_back(q);
    }
    return m;
}

RibbonGraph cap_blocks(const Marked& m, const Partition& p) {
    RibbonGraph g = m.graph;
    for (const auto& block : p.blocks())
        for (size_t i = 1; i < block.size(); ++i) {
            int first = RibbonGraph::twin(m.loop_head[block[0] - 1]);
            int other = RibbonGraph::twin(m.loop_head[block[i] - 1]);
            g.insert_edge(first, other);
        }
    return g;
}

Chain extend(const Chain& x, int edges) {
    Chain y = x;
    y.resize(edges, 0);
    return y;
}

std::vector<int> bfs_path(const RibbonGraph& g, int from, int to) {
    std::vector<std::vector<int>> out(g.vertex_count());
    for (int h = 0; h < g.half_edge_count(); ++h) out[g.vertex(h)].push_back(h);
    std::vector<int> via(g.vertex_count(), -2);
    via[from] = -1;
    std::deque<int> q{from};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int h : out[v]) {
            int w = g.vertex(RibbonGraph::twin(h));
            if (via[w] != -2) continue;
            via[w] = h;
            q.push_back(w);
        }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = g.vertex(via[v])) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

HomologyModel::HomologyModel(const RibbonGraph& r, const std::map<int, int>& holes, const Partition& p, int genus)
    : genus_(genus), partition_(p) {
    Marked m = mark_boundaries(r, holes);
    base_ = m.graph;
    hole_loop_ = m.loop_head;
    marked_ = m.vertex;
    relative_ = CellComplex(base_, hole_loop_, marked_);
    capped_ = CellComplex(cap_blocks(m, p), {}, {});
}

void HomologyModel::register_walk(int id, const std::string& name, std::vector<int> walk) {
    relative_pushoff_[id] = left_pushoff(relative_.graph(), walk);
    capped_pushoff_[id] = left_pushoff(capped_.graph(), walk);
    walks_[id] = std::move(walk);
    names_[name] = id;
}

void HomologyModel::finish() {
    const int E = base_.edge_count();
    // carrier: closed cycles and arcs between consecutive marked points of a block
    for (const auto& c : graph_cycle_basis(base_)) carrier_chains_.push_back(c);
    for (const auto& block : partition_.blocks())
        for (size_t i = 1; i < block.size(); ++i) {
            auto path = bfs_path(base_, marked_[block[i - 1] - 1], marked_[block[i] - 1]);
            carrier_chains_.push_back(walk_chain(path, E));
        }
    for (const auto& c : carrier_chains_) carrier_.push_back(relative_.coordinates(c));
    for (const auto& block : partition_.blocks()) {
        Chain sum(E, 0);
        for (int label : block) sum[RibbonGraph::edge(hole_loop_[label - 1])] += RibbonGraph::direction(hole_loop_[label - 1]);
        block_sums_.push_back(relative_.coordinates(sum));
    }
    block_lattice_ = row_echelon(IntMatrix::from_rows(block_sums_, relative_.rank()));

    const int r = capped_.rank();
    form_ = IntMatrix(r, r);
    for (int i = 0; i < r; ++i) {
        Chain ci = capped_.basis_chain(i);
        for (int j = 0; j < r; ++j) form_(i, j) = pairing(ci, left_pushoff(capped_.graph(), capped_.basis_walk(j)));
    }
    symplectic_ = r ? symplectic_basis(form_) : IntMatrix(0, 0);
}

HomologyModel HomologyModel::standard(int genus, const Partition& p) {
    const int n = p.universe();
    if (genus < 0 || n < 1) throw Error(ErrorCode::DegenerateParameters, "standard model needs g >= 0 and n >= 1");
    RibbonGraph r;
    r.add_vertex();
    std::vector<int> rotation;
    for (int i = 0; i < genus; ++i) {
        int x = r.add_edge(0, 0), y = r.add_edge(0, 0);
        for (int h : {2 * x, 2 * y, 2 * x + 1, 2 * y + 1}) rotation.push_back(h);
    }
    std::map<int, int> holes;
    for (int j = 1; j <= n; ++j) {
        int e = r.add_edge(0, 0);
        rotation.push_back(2 * e);
        rotation.push_back(2 * e + 1);
        holes[j] = 2 * e + 1;
    }
    r.set_rotation(rotation);
    HomologyModel m(r, holes, p, genus);
    int id = 0;
    for (int i = 0; i < genus; ++i) {
        m.register_walk(id++, "x" + std::to_string(i + 1), {4 * i});
        m.register_walk(id++, "y" + std::to_string(i + 1), {4 * i + 2});
    }
    for (int j = 1; j <= n; ++j) m.register_walk(id++, "d" + std::to_string(j), {m.hole_loop_[j - 1]});
    m.finish();
    // On the unmerged surface the loop classes already form a symplectic basis.
    if (p.is_maximal() && genus > 0) {
        std::vector<std::vector<Int>> cols;
        for (int i = 0; i < 2 * genus; ++i) cols.push_back(m.capped_class(i));
        IntMatrix u = IntMatrix::from_columns(cols, m.capped_rank());
        if (u.transpose() * m.form_ * u == standard_symplectic(genus)) m.symplectic_ = u;
    }
    return m;
}

HomologyModel HomologyModel::from_system(const CurveSystem& s, const Partition& p) {
    if (p.universe() != s.surface.boundary()) throw Error(ErrorCode::UniverseMismatch, "partition universe differs from boundary count");
    HomologyModel m(s.ribbon.graph, s.hole_half_edge, p, s.surface.genus());
    for (const auto& c : s.curves) {
        if (c.role == CurveRole::Chain || c.role == CurveRole::Probe) m.register_walk(c.id, c.name, c.walk);
        else if (c.role == CurveRole::Boundary) m.register_walk(c.id, c.name, {m.hole_loop_[c.hole - 1]});
    }
    m.finish();
    return m;
}

int HomologyModel::curve_id(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) throw Error(ErrorCode::ClassNotInModule, "no curve '" + name + "' in the model");
    return it->second;
}

std::vector<int> HomologyModel::curve_ids() const {
    std::vector<int> ids;
    for (const auto& [id, w] : walks_) ids.push_back(id);
    return ids;
}

Chain HomologyModel::apply(const MappingClass& f, Chain x, const std::map<int, Transverse>& pushoffs) const {
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) {
        auto po = pushoffs.find(it->curve);
        if (po == pushoffs.end()) throw Error(ErrorCode::ClassNotInModule, "curve " + std::to_string(it->curve) + " is not registered");
        Int k = mul_checked(pairing(x, po->second), it->power);
        if (!k) continue;
        for (int h : walks_.at(it->curve))
            x[RibbonGraph::edge(h)] = add_checked(x[RibbonGraph::edge(h)], mul_checked(k, RibbonGraph::direction(h)));
    }
    return x;
}

Chain HomologyModel::apply_relative(const MappingClass& f, Chain x) const { return apply(f, std::move(x), relative_pushoff_); }

IntMatrix HomologyModel::relative_matrix(const MappingClass& f) const {
    const int r = relative_.rank();
    IntMatrix m(r, r);
    for (int i = 0; i < r; ++i) {
        auto col = relative_.coordinates(apply(f, relative_.basis_chain(i), relative_pushoff_));
        for (int j = 0; j < r; ++j) m(j, i) = col[j];
    }
    return m;
}

IntMatrix HomologyModel::capped_matrix(const MappingClass& f) const {
    const int r = capped_.rank();
    IntMatrix m(r, r);
    for (int i = 0; i < r; ++i) {
        auto col = capped_.coordinates(apply(f, capped_.basis_chain(i), capped_pushoff_));
        for (int j = 0; j < r; ++j) m(j, i) = col[j];
    }
    return m;
}

std::vector<Int> HomologyModel::capped_class(int curve) const {
    auto it = walks_.find(curve);
    if (it == walks_.end()) throw Error(ErrorCode::ClassNotInModule, "curve " + std::to_string(curve) + " is not registered");
    return capped_.coordinates(extend(walk_chain(it->second, base_.edge_count()), capped_.edge_count()));
}

std::vector<Int> HomologyModel::relative_class(int curve) const {
    auto it = walks_.find(curve);
    if (it == walks_.end()) throw Error(ErrorCode::ClassNotInModule, "curve " + std::to_string(curve) + " is not registered");
    return relative_.coordinates(walk_chain(it->second, base_.edge_count()));
}

bool HomologyModel::acts_trivially(const MappingClass& f) const {
    IntMatrix F = relative_matrix(f);
    for (const auto& x : carrier_) {
        auto y = F * x;
        for (size_t i = 0; i < y.size(); ++i) y[i] = add_checked(y[i], -x[i]);
        if (!in_lattice(block_lattice_, y)) return false;
    }
    return true;
}

namespace {

struct Quotient {
    Echelon carrier;  // rows: basis of W in relative coordinates
    Smith smith;      // of the boundary sums written in that basis
    IntMatrix v_inverse;
    int rank = 0;     // rank of the boundary-sum lattice
};

Quotient partitioned_quotient(const std::vector<std::vector<Int>>& carrier, const std::vector<std::vector<Int>>& sums, int r) {
    Quotient q;
    q.carrier = row_echelon(IntMatrix::from_rows(carrier, r));
    const int w = q.carrier.rank();
    std::vector<std::vector<Int>> rows;
    for (const auto& s : sums) {
        auto c = solve_in(q.carrier, s);
        if (!c) throw Error(ErrorCode::PreconditionFailed, "boundary sum outside the carrier");
        rows.push_back(*c);
    }
    IntMatrix y = IntMatrix::from_rows(rows, w);
    q.smith = smith_normal_form(y);
    q.rank = q.smith.rank();
    q.v_inverse = inverse_unimodular(q.smith.V);
    return q;
}

}  // namespace

int HomologyModel::partitioned_rank() const {
    auto q = partitioned_quotient(carrier_, block_sums_, relative_.rank());
    return q.carrier.rank() - q.rank;
}

std::vector<Int> HomologyModel::partitioned_torsion() const {
    auto q = partitioned_quotient(carrier_, block_sums_, relative_.rank());
    std::vector<Int> t;
    for (Int d : q.smith.diagonal)
        if (d > 1) t.push_back(d);
    return t;
}

HomologyAction HomologyModel::act(const MappingClass& f) const {
    auto q = partitioned_quotient(carrier_, block_sums_, relative_.rank());
    const int w = q.carrier.rank();
    const int free = w - q.rank;
    IntMatrix F = relative_matrix(f);
    // basis of W: rows of V^{-1} * B; free part = rows rank..w-1
    IntMatrix basis = q.v_inverse * q.carrier.basis;
    HomologyAction a;
    a.target = Target::Partitioned;
    a.rank = free;
    a.matrix = IntMatrix(free, free);
    for (int i = 0; i < free; ++i) {
        auto image = F * basis.row(q.rank + i);
        auto c = solve_in(q.carrier, image);
        if (!c) throw Error(ErrorCode::PreconditionFailed, "carrier is not invariant");
        // z = c * V
        for (int j = 0; j < free; ++j) {
            Int z = 0;
            for (int k = 0; k < w; ++k) z = add_checked(z, mul_checked((*c)[k], q.smith.V(k, q.rank + j)));
            a.matrix(j, i) = z;
        }
    }
    for (Int d : q.smith.diagonal)
        if (d > 1) a.torsion.push_back(d);
    return a;
}

HomologyAction HomologyModel::capped_action(const MappingClass& f) const {
    HomologyAction a;
    a.target = Target::CappedClosed;
    a.rank = capped_.rank();
    IntMatrix m = capped_matrix(f);
    a.matrix = a.rank ? inverse_unimodular(symplectic_) * m * symplectic_ : m;
    return a;
}

HomologyModel build_homology_model(const PartitionedSurface& s) { return HomologyModel::standard(s.genus(), s.partition()); }

HomologyModel build_homology_model(const CurveSystem& s, const Partition& p) { return HomologyModel::from_system(s, p); }

HomologyAction transvection(const HomologyModel& model, int curve, int sign) {
    if (!model.has_curve(curve)) throw Error(ErrorCode::ClassNotInModule, "curve " + std::to_string(curve) + " is not registered");
    return model.act(MappingClass::twist(curve, sign));
}

HomologyAction act(const HomologyModel& model, const MappingClass& f) { return model.act(f); }

bool is_torelli(const CurveSystem& s, const MappingClass& f, const Partition& p) {
    return build_homology_model(s, p).acts_trivially(f);
}

HomologyAction capped_action(const CurveSystem& s, const MappingClass& f, const Partition& p) {
    return build_homology_model(s, p).capped_action(f);
}

Int lefschetz_number(const HomologyAction& a) {
    if (a.target != Target::CappedClosed) throw Error(ErrorCode::WrongTarget, "Lefschetz number needs a closed capped target");
    return 2 - a.matrix.trace();
}

bool finer_containment_check(const CurveSystem& s, const MappingClass& f, const Partition& p1, const Partition& p2) {
    if (!is_finer(p2, p1)) throw Error(ErrorCode::NotFiner, p2.to_string() + " does not refine " + p1.to_string());
    return !is_torelli(s, f, p1) || is_torelli(s, f, p2);
}

CappingConsistency verify_capping_consistency(const HomologyModel& m, const MappingClass& f) {
    CappingConsistency c;
    c.partitioned_trivial = m.acts_trivially(f);
    IntMatrix M = m.capped_matrix(f);
    c.capped_identity = M.is_identity();
    c.symplectic = M.transpose() * m.capped_form() * M == m.capped_form();
    return c;
}

CappingConsistency verify_capping_consistency(const CurveSystem& s, const MappingClass& f, const Partition& p) {
    return verify_capping_consistency(build_homology_model(s, p), f);
}

}  // namespace torelli
