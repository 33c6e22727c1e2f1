#include "torelli/cellular.hpp"

#include <algorithm>
#include <deque>

#include "torelli/errors.hpp"

namespace torelli {

std::int64_t pairing(const Chain& x, const Transverse& t) {
    std::int64_t s = 0;
    for (auto [e, sign] : t.crossings) s += sign * x[e];
    return s;
}

Chain walk_chain(const std::vector<int>& walk, int edge_count) {
    Chain c(edge_count, 0);
    for (int h : walk) c[RibbonGraph::edge(h)] += RibbonGraph::direction(h);
    return c;
}

Transverse left_pushoff(const RibbonGraph& g, const std::vector<int>& walk) {
    Transverse t;
    const size_t k = walk.size();
    for (size_t i = 0; i < k; ++i) {
        int in = RibbonGraph::twin(walk[i]);
        int out = walk[(i + 1) % k];
        if (g.vertex(in) != g.vertex(out)) throw Error(ErrorCode::MalformedRibbon, "walk is not closed");
        for (int x = g.next_ccw(out); x != in; x = g.next_ccw(x)) {
            t.crossings.emplace_back(RibbonGraph::edge(x), (x & 1) ? -1 : 1);
        }
    }
    return t;
}

std::vector<Chain> graph_cycle_basis(const RibbonGraph& g) {
    DisjointSets ds(g.vertex_count());
    std::vector<int> parent_half(g.vertex_count(), -1);
    std::vector<int> depth(g.vertex_count(), -1);
    std::vector<bool> tree(g.edge_count(), false);
    // BFS forest
    std::vector<std::vector<int>> out(g.vertex_count());
    for (int h = 0; h < g.half_edge_count(); ++h) out[g.vertex(h)].push_back(h);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (depth[root] != -1) continue;
        depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int h : out[v]) {
                int w = g.vertex(RibbonGraph::twin(h));
                if (depth[w] != -1) continue;
                depth[w] = depth[v] + 1;
                parent_half[w] = h;
                tree[RibbonGraph::edge(h)] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<Chain> basis;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree[e]) continue;
        Chain c(g.edge_count(), 0);
        c[e] += 1;
        int a = g.vertex(2 * e + 1), b = g.vertex(2 * e);  // walk head -> tail through the tree
        while (a != b) {
            if (depth[a] >= depth[b]) {
                int h = parent_half[a];  // parent -> a; we walk upward
                c[RibbonGraph::edge(h)] -= RibbonGraph::direction(h);
                a = g.vertex(h);
            } else {
                int h = parent_half[b];
                c[RibbonGraph::edge(h)] += RibbonGraph::direction(h);
                b = g.vertex(h);
            }
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

CellComplex::CellComplex(RibbonGraph graph, const std::vector<int>& excluded, const std::vector<int>& relative)
    : graph_(std::move(graph)), faces_(graph_.faces()) {
    const int V = graph_.vertex_count(), E = graph_.edge_count(), F = static_cast<int>(faces_.walks.size());
    included_.assign(F, true);
    for (int h : excluded) included_[faces_.face_of[h]] = false;

    merged_.assign(V, -1);
    int next_id = 0;
    int rel_id = -1;
    for (int v : relative) {
        if (rel_id == -1) rel_id = next_id++;
        merged_[v] = rel_id;
    }
    for (int v = 0; v < V; ++v)
        if (merged_[v] == -1) merged_[v] = next_id++;
    relative_.assign(next_id, false);
    if (rel_id != -1) relative_[rel_id] = true;

    // spanning tree on merged vertices
    std::vector<std::vector<int>> out(next_id);
    for (int h = 0; h < graph_.half_edge_count(); ++h) out[merged_[graph_.vertex(h)]].push_back(h);
    parent_half_.assign(next_id, -1);
    depth_.assign(next_id, -1);
    std::vector<bool> tree(E, false);
    int components = 0;
    for (int root = 0; root < next_id; ++root) {
        if (depth_[root] != -1) continue;
        ++components;
        depth_[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int h : out[v]) {
                int w = merged_[graph_.vertex(RibbonGraph::twin(h))];
                if (depth_[w] != -1) continue;
                depth_[w] = depth_[v] + 1;
                parent_half_[w] = h;
                tree[RibbonGraph::edge(h)] = true;
                queue.push_back(w);
            }
        }
    }
    if (components != 1) throw Error(ErrorCode::MalformedRibbon, "1-skeleton is disconnected");

    // dual spanning tree on the remaining edges
    std::vector<int> face_node(F, -1);
    bool outside = std::find(included_.begin(), included_.end(), false) != included_.end();
    int nodes = 0;
    if (outside) node_face_.push_back(-1), ++nodes;
    for (int f = 0; f < F; ++f)
        if (included_[f]) face_node[f] = nodes++, node_face_.push_back(f);
    auto node_of_half = [&](int h) {
        int f = faces_.face_of[h];
        return included_[f] ? face_node[f] : 0;
    };
    std::vector<std::vector<std::pair<int, int>>> dual_adj(nodes);
    for (int e = 0; e < E; ++e) {
        if (tree[e]) continue;
        int a = node_of_half(2 * e), b = node_of_half(2 * e + 1);
        dual_adj[a].emplace_back(b, e);
        dual_adj[b].emplace_back(a, e);
    }
    std::vector<bool> cotree(E, false);
    dual_parent_edge_.assign(nodes, -1);
    std::vector<bool> seen(nodes, false);
    seen[0] = true;
    dual_order_.push_back(0);
    for (size_t i = 0; i < dual_order_.size(); ++i) {
        int a = dual_order_[i];
        for (auto [b, e] : dual_adj[a]) {
            if (seen[b]) continue;
            seen[b] = true;
            dual_parent_edge_[b] = e;
            cotree[e] = true;
            dual_order_.push_back(b);
        }
    }
    if (static_cast<int>(dual_order_.size()) != nodes) throw Error(ErrorCode::MalformedRibbon, "dual graph is disconnected");

    for (int e = 0; e < E; ++e) {
        if (tree[e] || cotree[e]) continue;
        leftover_.push_back(e);
        std::vector<int> walk{2 * e};
        auto path = tree_path(merged_[graph_.vertex(2 * e + 1)], merged_[graph_.vertex(2 * e)]);
        walk.insert(walk.end(), path.begin(), path.end());
        basis_walks_.push_back(std::move(walk));
    }
}

std::vector<int> CellComplex::tree_path(int a, int b) const {
    std::vector<int> up, down;
    while (a != b) {
        if (depth_[a] >= depth_[b]) {
            int h = parent_half_[a];
            up.push_back(RibbonGraph::twin(h));
            a = merged_[graph_.vertex(h)];
        } else {
            int h = parent_half_[b];
            down.push_back(h);
            b = merged_[graph_.vertex(h)];
        }
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

Chain CellComplex::face_boundary(int face) const { return walk_chain(faces_.walks[face], edge_count()); }

bool CellComplex::is_relative_cycle(const Chain& x) const {
    std::vector<std::int64_t> boundary(relative_.size(), 0);
    for (int e = 0; e < edge_count(); ++e) {
        if (!x[e]) continue;
        boundary[merged_[graph_.vertex(2 * e + 1)]] += x[e];
        boundary[merged_[graph_.vertex(2 * e)]] -= x[e];
    }
    for (size_t v = 0; v < boundary.size(); ++v)
        if (boundary[v] != 0 && !relative_[v]) return false;
    return true;
}

std::vector<std::int64_t> CellComplex::coordinates(const Chain& x0) const {
    if (static_cast<int>(x0.size()) != edge_count()) throw Error(ErrorCode::PreconditionFailed, "chain length mismatch");
    if (!is_relative_cycle(x0)) throw Error(ErrorCode::PreconditionFailed, "chain is not a cycle");
    Chain x = x0;
    for (size_t i = 1; i < dual_order_.size(); ++i) {
        int node = dual_order_[i];
        int f = node_face_[node];
        int e = dual_parent_edge_[node];
        std::int64_t coeff = 0;
        for (int h : faces_.walks[f])
            if (RibbonGraph::edge(h) == e) coeff += RibbonGraph::direction(h);
        std::int64_t a = x[e] / coeff;
        if (a == 0) continue;
        for (int h : faces_.walks[f]) x[RibbonGraph::edge(h)] -= a * RibbonGraph::direction(h);
    }
    std::vector<std::int64_t> coords;
    coords.reserve(leftover_.size());
    for (int e : leftover_) coords.push_back(x[e]);
    return coords;
}

}  // namespace torelli
