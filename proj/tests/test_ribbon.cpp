#include "doctest.h"
#include "torelli/cellular.hpp"
#include "torelli/curve_system.hpp"
#include "torelli/errors.hpp"
#include "torelli/ribbon.hpp"

using namespace torelli;

namespace {
// One vertex, loops x = edge 0 and y = edge 1 with rotation (x+, y+, x-, y-).
RibbonGraph torus() {
    RibbonGraph g;
    int v = g.add_vertex();
    g.add_edge(v, v);
    g.add_edge(v, v);
    g.set_rotation({0, 2, 1, 3});
    return g;
}

int euler(const RibbonGraph& g) { return g.vertex_count() - g.edge_count() + static_cast<int>(g.faces().walks.size()); }

Ribbon lens() { return build_ribbon({{0, 1}, {0, 1}}, {{0, 1, 1}, {0, 1, -1}}); }
}  // namespace

TEST_SUITE("ribbon") {
    TEST_CASE("one-vertex torus") {
        auto g = torus();
        CHECK(g.valid());
        auto f = g.faces();
        CHECK(f.walks.size() == 1);
        CHECK(f.walks[0].size() == 4);
        CHECK(euler(g) == 0);
    }

    TEST_CASE("faces partition the half-edges") {
        auto r = lens();
        std::vector<int> seen(r.graph.half_edge_count(), 0);
        for (const auto& w : r.faces.walks)
            for (int h : w) ++seen[h];
        for (int c : seen) CHECK(c == 1);
        for (int h = 0; h < r.graph.half_edge_count(); ++h) CHECK(r.faces.face_of[r.graph.phi(h)] == r.faces.face_of[h]);
    }

    TEST_CASE("two curves crossing twice on the sphere") {
        auto r = lens();
        CHECK(r.graph.vertex_count() == 2);
        CHECK(r.graph.edge_count() == 4);
        CHECK(r.faces.walks.size() == 4);
        for (const auto& w : r.faces.walks) CHECK(w.size() == 2);
        CHECK(euler(r.graph) == 2);
        for (const auto& x : r.slots) CHECK(r.graph.around(x[0]).size() == 4);
    }

    TEST_CASE("rotation at a crossing follows the sign") {
        auto r = lens();
        // positive: (c_out, d_out, c_in, d_in); negative: (c_out, d_in, c_in, d_out)
        CHECK(r.graph.next_ccw(r.slots[0][0]) == r.slots[0][2]);
        CHECK(r.graph.next_ccw(r.slots[0][2]) == r.slots[0][1]);
        CHECK(r.graph.next_ccw(r.slots[1][0]) == r.slots[1][3]);
        CHECK(r.graph.next_ccw(r.slots[1][3]) == r.slots[1][1]);
    }

    TEST_CASE("edge insertion keeps the graph valid") {
        auto g = torus();
        g.insert_edge(0, 2);
        CHECK(g.valid());
        CHECK(euler(g) == 0);
        int q = -1;
        g.insert_edge_to_new_vertex(1, q);
        CHECK(g.valid());
        CHECK(q == 1);
        CHECK(euler(g) == 0);
    }

    TEST_CASE("cycle basis size is E - V + 1") {
        auto g = torus();
        CHECK(graph_cycle_basis(g).size() == 2);
        auto r = lens();
        CHECK(graph_cycle_basis(r.graph).size() == 3);
    }

    TEST_CASE("torus cell complex and pairing") {
        CellComplex c(torus());
        CHECK(c.rank() == 2);
        auto x = walk_chain({0}, 2), y = walk_chain({2}, 2);
        CHECK(c.is_relative_cycle(x));
        auto px = left_pushoff(c.graph(), {0}), py = left_pushoff(c.graph(), {2});
        std::int64_t xy = pairing(x, py), yx = pairing(y, px);
        CHECK(std::abs(xy) == 1);
        CHECK(xy == -yx);
        CHECK(pairing(x, px) == 0);
        auto cx = c.coordinates(x), cy = c.coordinates(y);
        CHECK(cx != cy);
    }

    TEST_CASE("relative complexes") {
        auto r = lens();
        CHECK(CellComplex(r.graph).rank() == 0);
        // sphere minus two disks: an annulus
        CHECK(CellComplex(r.graph, {r.faces.walks[0][0], r.faces.walks[1][0]}).rank() == 1);
        // the same annulus relative to both crossings
        CHECK(CellComplex(r.graph, {r.faces.walks[0][0], r.faces.walks[1][0]}, {0, 1}).rank() == 2);
        auto bad = walk_chain({0}, r.graph.edge_count());
        CHECK_THROWS_AS(CellComplex(r.graph).coordinates(bad), Error);
    }
}
