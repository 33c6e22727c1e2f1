#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torelli/ribbon.hpp"

namespace torelli {

using Chain = std::vector<std::int64_t>;  // coefficient per edge

// A transverse curve given by the signed list of edges it crosses.
struct Transverse {
    std::vector<std::pair<int, int>> crossings;  // (edge, sign)
};

std::int64_t pairing(const Chain& x, const Transverse& t);

// Chain traversed by a closed walk of half-edges.
Chain walk_chain(const std::vector<int>& walk, int edge_count);

// Left pushoff of a simple closed walk: the half-edges met when turning
// counterclockwise from the outgoing half-edge back to the incoming one.
Transverse left_pushoff(const RibbonGraph& g, const std::vector<int>& walk);

// Spanning-tree cycle basis of the 1-skeleton.
std::vector<Chain> graph_cycle_basis(const RibbonGraph& g);

// 2-complex on a ribbon graph: every face is a 2-cell except the excluded
// ones, and the relative vertices are collapsed to a point. Coordinates are
// read off a tree-cotree decomposition.
class CellComplex {
public:
    CellComplex() = default;
    CellComplex(RibbonGraph graph, const std::vector<int>& excluded_face_half_edges = {},
                const std::vector<int>& relative_vertices = {});

    const RibbonGraph& graph() const { return graph_; }
    const RibbonGraph::Faces& faces() const { return faces_; }
    bool included(int face) const { return included_[face]; }
    int rank() const { return static_cast<int>(leftover_.size()); }
    int edge_count() const { return graph_.edge_count(); }

    Chain face_boundary(int face) const;
    // Coordinates of a (relative) cycle; throws PreconditionFailed otherwise.
    std::vector<std::int64_t> coordinates(const Chain& x) const;
    // Fundamental cycle of the i-th leftover edge, as a walk of half-edges
    // starting with the leftover edge.
    const std::vector<int>& basis_walk(int i) const { return basis_walks_[i]; }
    Chain basis_chain(int i) const { return walk_chain(basis_walks_[i], edge_count()); }
    bool is_relative_cycle(const Chain& x) const;

private:
    std::vector<int> tree_path(int from, int to) const;  // half-edges, merged vertices

    RibbonGraph graph_;
    RibbonGraph::Faces faces_;
    std::vector<bool> included_;
    std::vector<int> merged_;        // vertex -> merged vertex id
    std::vector<bool> relative_;     // merged vertex collapsed
    std::vector<int> parent_half_;   // merged vertex -> half-edge pointing to it from parent, -1 at root
    std::vector<int> depth_;
    std::vector<int> dual_order_;    // dual nodes in BFS order (root first)
    std::vector<int> dual_parent_edge_;
    std::vector<int> node_face_;     // dual node -> face, -1 for the outside node
    std::vector<int> leftover_;
    std::vector<std::vector<int>> basis_walks_;
};

}  // namespace torelli
