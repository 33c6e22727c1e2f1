#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torelli/cellular.hpp"
#include "torelli/curve_system.hpp"
#include "torelli/int_matrix.hpp"
#include "torelli/mapping_class.hpp"
#include "torelli/surface.hpp"

namespace torelli {

enum class Target { Partitioned, CappedClosed };

struct HomologyAction {
    Target target = Target::Partitioned;
    int rank = 0;
    IntMatrix matrix;           // action on the free part in the presentation basis
    std::vector<Int> torsion;   // invariant factors > 1 of the module
};

// Homology of S with one marked point per boundary component, together
// with the partition data: the relative group H1(S, Q), the partitioned
// subquotient H1^P, and the closed surface obtained by capping each block
// with a planar surface.
class HomologyModel {
public:
    // One-vertex cellulation of S_g^n with loop curves x_i, y_i and boundary
    // curves d_j registered by name.
    static HomologyModel standard(int genus, const Partition& p);
    static HomologyModel from_system(const CurveSystem& s, const Partition& p);

    const Partition& partition() const { return partition_; }
    int genus() const { return genus_; }
    int relative_rank() const { return relative_.rank(); }

    bool has_curve(int id) const { return walks_.count(id) > 0; }
    int curve_id(const std::string& name) const;
    std::vector<int> curve_ids() const;

    // Action of a word on H1(S, Q) in tree-cotree coordinates.
    IntMatrix relative_matrix(const MappingClass& f) const;
    // Images of the carrier generators of H1^P in H1(S, Q) coordinates.
    const std::vector<std::vector<Int>>& carrier() const { return carrier_; }
    const std::vector<std::vector<Int>>& boundary_sums() const { return block_sums_; }

    // Free rank and torsion of H1^P.
    int partitioned_rank() const;
    std::vector<Int> partitioned_torsion() const;

    bool acts_trivially(const MappingClass& f) const;
    HomologyAction act(const MappingClass& f) const;

    // Closed capped surface.
    int capped_rank() const { return capped_.rank(); }
    const IntMatrix& capped_form() const { return form_; }          // tree-cotree basis
    const IntMatrix& capped_basis() const { return symplectic_; }   // columns: presentation basis
    IntMatrix capped_matrix(const MappingClass& f) const;           // tree-cotree basis
    HomologyAction capped_action(const MappingClass& f) const;      // presentation basis
    std::vector<Int> capped_class(int curve) const;
    std::vector<Int> relative_class(int curve) const;

    // chain-level transvection on the relative complex
    Chain apply_relative(const MappingClass& f, Chain x) const;

private:
    HomologyModel(const RibbonGraph& base, const std::map<int, int>& hole_half_edges, const Partition& p, int genus);
    void register_walk(int id, const std::string& name, std::vector<int> walk);
    void finish();
    Chain apply(const MappingClass& f, Chain x, const std::map<int, Transverse>& pushoffs) const;

    int genus_ = 0;
    Partition partition_;
    RibbonGraph base_;
    std::vector<int> hole_loop_;    // label-1 -> head half-edge of the boundary loop
    std::vector<int> marked_;       // label-1 -> marked vertex
    CellComplex relative_;
    CellComplex capped_;
    std::map<int, std::vector<int>> walks_;
    std::map<std::string, int> names_;
    std::map<int, Transverse> relative_pushoff_;
    std::map<int, Transverse> capped_pushoff_;
    std::vector<std::vector<Int>> carrier_;
    std::vector<Chain> carrier_chains_;
    std::vector<std::vector<Int>> block_sums_;
    Echelon block_lattice_;
    IntMatrix form_;
    IntMatrix symplectic_;
};

HomologyModel build_homology_model(const PartitionedSurface& s);
HomologyModel build_homology_model(const CurveSystem& s, const Partition& p);

HomologyAction transvection(const HomologyModel& model, int curve, int sign);
HomologyAction act(const HomologyModel& model, const MappingClass& f);

bool is_torelli(const CurveSystem& s, const MappingClass& f, const Partition& p);
HomologyAction capped_action(const CurveSystem& s, const MappingClass& f, const Partition& p);
// Throws WrongTarget unless the action is on a closed capped surface.
Int lefschetz_number(const HomologyAction& a);
// is_torelli(f, p1) implies is_torelli(f, p2); throws NotFiner unless p2 refines p1.
bool finer_containment_check(const CurveSystem& s, const MappingClass& f, const Partition& p1, const Partition& p2);

struct CappingConsistency {
    bool partitioned_trivial = false;
    bool capped_identity = false;
    bool symplectic = false;
    bool agree() const { return partitioned_trivial == capped_identity; }
};
CappingConsistency verify_capping_consistency(const CurveSystem& s, const MappingClass& f, const Partition& p);
CappingConsistency verify_capping_consistency(const HomologyModel& m, const MappingClass& f);

}  // namespace torelli
