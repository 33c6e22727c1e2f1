#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torelli/bounds.hpp"
#include "torelli/curve_system.hpp"
#include "torelli/mapping_class.hpp"
#include "torelli/rational.hpp"

namespace torelli {

using WeightVector = std::vector<BigInt>;  // indexed by curve id
using BigMatrix = std::vector<std::vector<BigInt>>;

// T_A T_B^{-1}: positive twists on A in ascending id order, then inverse
// twists on B. Throws FamilyOverlap or NotFilling.
MappingClass make_penner_class(const CurveSystem& s);

WeightVector unit_weight(const CurveSystem& s, int curve);
// w'_c = w_c + sum_d i(c, d) w_d; the sign only records the twist direction.
WeightVector twist_weight_step(const CurveSystem& s, const WeightVector& w, int curve, int sign);
WeightVector apply_class(const CurveSystem& s, const WeightVector& w, const MappingClass& f);
std::vector<int> support(const WeightVector& w);
// Supports of f^j(start) for j = 0..steps.
std::vector<std::vector<int>> support_orbit(const CurveSystem& s, const MappingClass& f, int start, int steps);

// Chain interval the support schedule allows after `step` applications.
std::vector<int> schedule_window(const CurveSystem& s, int step);

struct ScheduleReport {
    bool passes = true;
    int first_violation = -1;                 // step index
    std::vector<std::vector<int>> supports;   // steps 1..N_claim
    std::vector<std::vector<int>> windows;
    std::vector<bool> tight;                  // support == window
    int first_window_size = 0;
};
ScheduleReport containment_schedule_check(const CurveSystem& s, const MappingClass& f);

struct DistanceCertificate {
    int g = 0, n = 0;
    std::string partition;
    ConstructionParameters params;
    int delta = -1, gamma = -1;
    int N = 0;
    std::vector<std::vector<int>> trace;                 // supports after 0..N steps
    std::vector<std::pair<int, int>> terminal_checks;    // (curve, i(gamma, curve)) over the last support
    Rational bound;
    BoundReport chain;
};

// Throws PreconditionFailed for N < 1 and DisjointnessFailed when gamma meets
// the support of f^N(delta).
DistanceCertificate certify_distance_two(const CurveSystem& s, const MappingClass& f, int N);
// Largest N in [1, cap] that certifies, or 0.
int largest_certified_N(const CurveSystem& s, const MappingClass& f, int cap);

struct TransitionMatrix {
    std::vector<int> ids;  // row/column order
    BigMatrix m;
};
TransitionMatrix transition_matrix(const CurveSystem& s, const MappingClass& f);

// Smallest q <= cap with a positive diagonal entry in M^q; CapExceeded otherwise.
int positive_diagonal_power(const BigMatrix& m, int cap);
// Smallest q with M^q strictly positive, up to Wielandt's bound; nullopt if none.
std::optional<int> primitivity_exponent(const BigMatrix& m);

struct PerronInterval {
    Rational lower, upper;
    int iterations = 0;
};
// Collatz-Wielandt bounds min/max (Mx)_i/x_i on positive vectors; throws
// NotPrimitive for non-primitive input and CapExceeded if the width stalls.
PerronInterval perron_estimate(const BigMatrix& m, const Rational& tol, int max_iterations = 20000);

}  // namespace torelli
