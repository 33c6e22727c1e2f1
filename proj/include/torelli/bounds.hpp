#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

Rational gadre_tsai_threshold(int g, int n);

struct ChainLink {
    std::string label;              // e.g. "8/(k+n-4)"
    std::optional<Rational> value;  // empty when the denominator is not positive
};

struct ChainStep {
    std::string relation;           // relation claimed between consecutive links
    std::optional<bool> verdict;    // empty when either side is undefined
};

struct BoundReport {
    int g = 0, n = 0, N = 0;
    std::vector<ChainLink> links;
    std::vector<ChainStep> steps;   // steps[i] relates links[i] and links[i+1]
    Rational certified;             // 2/N
    std::optional<Rational> chain_final;  // 32/(|chi|-18)
    bool final_domain_ok = false;         // |chi| > 18
    std::optional<bool> end_to_end;       // 2/N <= chain_final
    std::optional<Rational> threshold;    // Gadre-Tsai lower threshold
    std::optional<bool> threshold_below_final;
    bool all_defined_hold() const;
};

// Evaluates the upper-bound chain for the construction at (g, n).
BoundReport bound_chain_verify(int g, int n, int N);

Rational euler_poincare_monogon_bound(int g, int n, int k2);

struct EpsilonBound {
    bool hypothesis_ok = false;   // g < (1/4 - eps) n
    Rational bound;               // (4 eps n - k2 + 4) / 2
    std::optional<bool> strict;   // euler_poincare bound > bound, when the hypothesis holds
};
EpsilonBound epsilon_monogon_bound(int g, int n, int k2, const Rational& eps);

int real_branch_bound(int g, int n);

enum class BranchCase { Monogon, Bigon };

struct BranchCount {
    Rational branches;        // lower bound on real branches
    int ceiling = 0;          // 9 |chi|
    std::optional<Rational> regime_ceiling;  // 9 (3n/2 - 2), when g < (1/4 - eps) n
    bool fires = false;       // branches > ceiling
};
// Monogon case uses k1 > eps n + 2; bigon case takes k2 = 2 eps n.
BranchCount branch_counting_contradiction(int g, int n, const Rational& eps, int N, BranchCase c);
int minimal_contradicting_N(int g, int n, const Rational& eps, BranchCase c);

Rational lower_bound_scale(int q, int g, int n);

}  // namespace torelli
