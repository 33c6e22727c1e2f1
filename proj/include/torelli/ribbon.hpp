#pragma once

#include <vector>

namespace torelli {

// Oriented ribbon graph on half-edges. Edge e has tail half-edge 2e and head
// half-edge 2e+1; next_ccw is the rotation at each vertex.
class RibbonGraph {
public:
    int vertex_count() const { return vertices_; }
    int edge_count() const { return static_cast<int>(next_.size() / 2); }
    int half_edge_count() const { return static_cast<int>(next_.size()); }

    int vertex(int h) const { return vertex_[h]; }
    int next_ccw(int h) const { return next_[h]; }
    int prev_ccw(int h) const;
    static int twin(int h) { return h ^ 1; }
    static int edge(int h) { return h >> 1; }
    static int direction(int h) { return (h & 1) ? -1 : 1; }
    // Face permutation; orbits are the boundary walks of faces.
    int phi(int h) const { return next_[h ^ 1]; }

    int add_vertex();
    // New edge from u to w with the rotation at each end left open; returns
    // the edge id. Rotation must be fixed afterwards by set_rotation or insert.
    int add_edge(int u, int w);
    void set_rotation(const std::vector<int>& ccw_half_edges);
    // New edge whose tail sits just after half-edge `after_tail` in the
    // rotation at its vertex and whose head sits just after `after_head`.
    int insert_edge(int after_tail, int after_head);
    int insert_edge_to_new_vertex(int after_tail, int& new_vertex);

    std::vector<int> around(int v_half_edge) const;

    // Face decomposition: ordered by least half-edge; face_of maps each
    // half-edge to its face.
    struct Faces {
        std::vector<std::vector<int>> walks;
        std::vector<int> face_of;
    };
    Faces faces() const;

    bool valid() const;

private:
    int vertices_ = 0;
    std::vector<int> next_;
    std::vector<int> vertex_;
};

// Union-find over small integer ranges.
class DisjointSets {
public:
    explicit DisjointSets(int n);
    int find(int x);
    bool unite(int a, int b);

private:
    std::vector<int> parent_;
};

}  // namespace torelli
