#include "torelli/ribbon.hpp"

#include <numeric>

#include "torelli/errors.hpp"

namespace torelli {

int RibbonGraph::prev_ccw(int h) const {
    int p = h;
    while (next_[p] != h) p = next_[p];
    return p;
}

int RibbonGraph::add_vertex() { return vertices_++; }

int RibbonGraph::add_edge(int u, int w) {
    int e = edge_count();
    next_.push_back(2 * e);
    next_.push_back(2 * e + 1);
    vertex_.push_back(u);
    vertex_.push_back(w);
    return e;
}

void RibbonGraph::set_rotation(const std::vector<int>& ccw) {
    for (size_t i = 0; i < ccw.size(); ++i) {
        if (vertex_[ccw[i]] != vertex_[ccw[0]]) throw Error(ErrorCode::MalformedRibbon, "rotation mixes vertices");
        next_[ccw[i]] = ccw[(i + 1) % ccw.size()];
    }
}

int RibbonGraph::insert_edge(int after_tail, int after_head) {
    int e = add_edge(vertex_[after_tail], vertex_[after_head]);
    int t = 2 * e, h = 2 * e + 1;
    next_[t] = next_[after_tail];
    next_[after_tail] = t;
    int anchor = after_head;
    next_[h] = next_[anchor];
    next_[anchor] = h;
    return e;
}

int RibbonGraph::insert_edge_to_new_vertex(int after_tail, int& new_vertex) {
    new_vertex = add_vertex();
    int e = add_edge(vertex_[after_tail], new_vertex);
    int t = 2 * e;
    next_[t] = next_[after_tail];
    next_[after_tail] = t;
    return e;
}

std::vector<int> RibbonGraph::around(int h) const {
    std::vector<int> out{h};
    for (int x = next_[h]; x != h; x = next_[x]) out.push_back(x);
    return out;
}

RibbonGraph::Faces RibbonGraph::faces() const {
    Faces f;
    f.face_of.assign(next_.size(), -1);
    for (int h = 0; h < half_edge_count(); ++h) {
        if (f.face_of[h] != -1) continue;
        std::vector<int> walk;
        int x = h;
        do {
            f.face_of[x] = static_cast<int>(f.walks.size());
            walk.push_back(x);
            x = phi(x);
        } while (x != h);
        f.walks.push_back(std::move(walk));
    }
    return f;
}

bool RibbonGraph::valid() const {
    std::vector<int> seen(next_.size(), 0);
    for (int h = 0; h < half_edge_count(); ++h) {
        if (next_[h] < 0 || next_[h] >= half_edge_count()) return false;
        if (vertex_[next_[h]] != vertex_[h]) return false;
        ++seen[next_[h]];
    }
    for (int s : seen)
        if (s != 1) return false;
    return true;
}

DisjointSets::DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int DisjointSets::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSets::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
}

}  // namespace torelli
