#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torelli/cellular.hpp"
#include "torelli/ribbon.hpp"
#include "torelli/surface.hpp"

namespace torelli {

struct ConstructionParameters {
    int g = 0, n = 0;
    int m = 0;        // g = 2 + 2m (even) or 3 + 2m (odd)
    bool even_genus = true;
    int k = 0;        // left a-chain length
    int l = 0;        // b-chain length
    int t = 0;        // left frontier index after N_claim steps
    int N_claim = 0;  // ceil(k/4) + floor(n/4)
};

// Throws DegenerateParameters unless g >= 4 and n >= 2.
ConstructionParameters construction_parameters(int g, int n);

enum class Family { A, B, Reference };
enum class CurveRole { Chain, Boundary, Probe, Dual };

const char* family_name(Family f);

struct Curve {
    int id = 0;
    std::string name;
    Family family = Family::Reference;
    CurveRole role = CurveRole::Chain;
    std::vector<int> crossings;  // Chain: cyclic crossing order
    std::vector<int> walk;       // Chain and Probe: closed walk of half-edges in the ribbon
    int hole = 0;                // Boundary: hole label
};

struct Crossing {
    int first = 0, second = 0;  // curve ids
    int sign = 1;               // algebraic sign of first . second
};

// Crossing-based ribbon: vertices are crossings, edges are the arcs of the
// chain curves between consecutive crossings.
struct Ribbon {
    RibbonGraph graph;
    RibbonGraph::Faces faces;
    std::vector<int> edge_curve;                    // edge -> curve id
    std::vector<std::vector<int>> curve_walks;      // per chain curve index
    std::vector<std::array<int, 4>> slots;          // per crossing: first out/in, second out/in
};

// Slots: rotation at a positive crossing is (c_out, d_out, c_in, d_in),
// at a negative one (c_out, d_in, c_in, d_out).
Ribbon build_ribbon(const std::vector<std::vector<int>>& curve_cycles, const std::vector<Crossing>& crossings);

struct DualCycle {
    std::vector<int> faces;
    Transverse transverse;
    std::map<int, int> curve_crossings;  // curve id -> number of arcs crossed
    int witness_basis = -1;              // closed-surface basis cycle it pairs with
    std::int64_t witness_pairing = 0;
};

enum class RegionKind { Disk, BoundaryAnnulus, Other };

struct Region {
    std::vector<int> faces;
    std::vector<int> holes;
    int euler = 0;
    RegionKind kind = RegionKind::Other;
};

class CurveSystem {
public:
    PartitionedSurface surface;
    ConstructionParameters params;
    std::vector<Curve> curves;
    std::vector<Crossing> crossings;
    Ribbon ribbon;
    std::map<int, int> hole_half_edge;   // label -> half-edge on the hole face
    std::vector<int> chain;              // A and B curve ids in linear order
    int delta = -1, gamma = -1, beta = -1, probe = -1;
    DualCycle gamma_cycle;
    std::vector<std::vector<int>> intersections;  // among chain curves and gamma, by id
    std::vector<bool> active;

    CurveSystem(PartitionedSurface s) : surface(std::move(s)) {}

    int curve_count() const { return static_cast<int>(curves.size()); }
    const Curve& curve(int id) const;
    int find(const std::string& name) const;
    std::vector<int> family(Family f) const;  // active chain curves of a family
    int chain_position(int id) const;
    int hole_face(int label) const { return ribbon.faces.face_of[hole_half_edge.at(label)]; }
    bool is_hole_face(int face) const;

    CurveSystem without(int id) const;
    CurveSystem with_family(int id, Family f) const;
    CurveSystem with_extra_intersection(int c, int d, int count) const;
};

CurveSystem build_penner_system(const PartitionedSurface& s);
CurveSystem build_penner_system(int g, int n, const Partition& p);
CurveSystem build_penner_system(int g, int n);

int geometric_intersection(const CurveSystem& s, int c, int d);
int algebraic_intersection(const CurveSystem& s, int c, int d);
std::vector<std::vector<int>> adjacency_graph(const CurveSystem& s);  // over active chain curves, by id

// Complementary regions of the active chain curves.
std::vector<Region> trace_faces(const CurveSystem& s);
bool check_filling(const CurveSystem& s);
bool check_family_disjointness(const CurveSystem& s);

struct ValidationReport {
    bool filling = false;
    bool family_disjoint = false;
    bool parity = false;            // every i(c,d) even with zero algebraic intersection
    bool euler_balance = false;     // V - E + sum chi(region) = chi(S)
    bool separating = false;        // every chain curve separates
    bool essential = false;         // both sides of every chain curve have chi <= -1
    bool non_isotopic = false;
    bool minimal_position = false;  // no bigon disk faces
    bool genus_matches = false;
    bool gamma_ok = false;          // gamma essential and disjoint from the terminal window
    std::vector<std::string> failures;
    bool all() const {
        return filling && family_disjoint && parity && euler_balance && separating && essential && non_isotopic &&
               minimal_position && genus_matches && gamma_ok;
    }
};

ValidationReport validate_system(const CurveSystem& s);

// Closed capped surface with every hole capped by a disk, on the ribbon alone.
CellComplex closed_complex(const CurveSystem& s);

}  // namespace torelli
