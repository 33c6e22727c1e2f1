#include "torelli/bounds.hpp"

#include "torelli/curve_system.hpp"
#include "torelli/errors.hpp"
#include "torelli/surface.hpp"

namespace torelli {

namespace {
int abs_euler(int g, int n) { return -euler_characteristic(g, n); }

std::optional<Rational> positive_ratio(const Rational& num, const Rational& den) {
    if (den <= 0) return std::nullopt;
    return num / den;
}
}  // namespace

Rational gadre_tsai_threshold(int g, int n) {
    if (euler_characteristic(g, n) >= 0)
        throw Error(ErrorCode::NonpositiveDenominator, "threshold is stated for chi < 0 only");
    BigInt x = 2 * g - 2 + n;
    BigInt den = 18 * x * x + 30 * x - 10 * n;
    if (den <= 0) throw Error(ErrorCode::NonpositiveDenominator, "threshold denominator " + den.str());
    return Rational(1, den);
}

bool BoundReport::all_defined_hold() const {
    for (const auto& s : steps)
        if (s.verdict && !*s.verdict) return false;
    if (end_to_end && !*end_to_end) return false;
    return true;
}

BoundReport bound_chain_verify(int g, int n, int N) {
    if (N < 1) throw Error(ErrorCode::PreconditionFailed, "N must be positive");
    auto p = construction_parameters(g, n);
    BoundReport r;
    r.g = g;
    r.n = n;
    r.N = N;
    const int chi = abs_euler(g, n);
    r.certified = Rational(2, N);
    r.final_domain_ok = chi > 18;
    r.chain_final = positive_ratio(32, Rational(chi - 18));
    const Rational k(p.k), nn(n), gg(g);
    r.links.push_back({"2/N", r.certified});
    r.links.push_back({"2/(ceil(k/4)+floor(n/4))", Rational(2, p.N_claim)});
    auto rel = [&](const std::string& s) { r.steps.push_back({s, std::nullopt}); };
    rel("<=");
    if (p.even_genus) {
        r.links.push_back({"2/(k/4+n/4-1)", positive_ratio(2, k / 4 + nn / 4 - 1)});
        rel("<=");
        r.links.push_back({"8/(k+n-4)", positive_ratio(8, k + nn - 4)});
        rel("<=");  // printed as an equality, which needs k = (g-2)/2
        r.links.push_back({"8/((g-2)/2+n-4)", positive_ratio(8, (gg - 2) / 2 + nn - 4)});
        rel("<=");
        r.links.push_back({"16/(g+2n-10)", positive_ratio(16, gg + 2 * nn - 10)});
        rel("<=");
        r.links.push_back({"16/(g+n/2-10)", positive_ratio(16, gg + nn / 2 - 10)});
        rel("<");
    }
    r.links.push_back({"32/(|chi|-18)", r.chain_final});
    rel(p.even_genus ? "=" : "<=");
    for (size_t i = 0; i < r.steps.size(); ++i) {
        const auto& a = r.links[i].value;
        const auto& b = r.links[i + 1].value;
        if (!a || !b) continue;
        const auto& s = r.steps[i].relation;
        r.steps[i].verdict = s == "<=" ? *a <= *b : s == "<" ? *a < *b : *a == *b;
    }
    if (r.chain_final) r.end_to_end = r.certified <= *r.chain_final;
    r.threshold = gadre_tsai_threshold(g, n);
    if (r.chain_final) r.threshold_below_final = *r.threshold < *r.chain_final;
    return r;
}

Rational euler_poincare_monogon_bound(int g, int n, int k2) {
    if (k2 < 0) throw Error(ErrorCode::PreconditionFailed, "k2 must be nonnegative");
    return Rational(n - k2 + 4 - 4 * g, 2);
}

EpsilonBound epsilon_monogon_bound(int g, int n, int k2, const Rational& eps) {
    if (eps <= 0 || eps >= Rational(1, 4)) throw Error(ErrorCode::BadEpsilon, "need 0 < eps < 1/4, got " + to_fraction(eps));
    EpsilonBound b;
    b.hypothesis_ok = Rational(g) < (Rational(1, 4) - eps) * n;
    b.bound = (4 * eps * n - k2 + 4) / 2;
    if (b.hypothesis_ok) b.strict = euler_poincare_monogon_bound(g, n, k2) > b.bound;
    return b;
}

int real_branch_bound(int g, int n) {
    if (euler_characteristic(g, n) >= 0) throw Error(ErrorCode::NonnegativeEuler, "real-branch bound needs chi < 0");
    return 9 * abs_euler(g, n);
}

BranchCount branch_counting_contradiction(int g, int n, const Rational& eps, int N, BranchCase c) {
    if (eps <= 0 || eps >= Rational(1, 4)) throw Error(ErrorCode::BadEpsilon, "need 0 < eps < 1/4, got " + to_fraction(eps));
    if (N < 0) throw Error(ErrorCode::PreconditionFailed, "branch count must be nonnegative");
    BranchCount b;
    b.ceiling = real_branch_bound(g, n);
    if (Rational(g) < (Rational(1, 4) - eps) * n) b.regime_ceiling = 9 * (Rational(3 * n, 2) - 2);
    if (c == BranchCase::Monogon) b.branches = Rational(N, 2) * (eps * n + 2);
    else b.branches = N * eps * n;
    b.fires = b.branches > b.ceiling;
    return b;
}

int minimal_contradicting_N(int g, int n, const Rational& eps, BranchCase c) {
    Rational per = c == BranchCase::Monogon ? Rational((eps * n + 2) / 2) : Rational(eps * n);
    if (per <= 0) throw Error(ErrorCode::PreconditionFailed, "per-polygon branch weight is not positive");
    Rational ceiling = real_branch_bound(g, n);
    // smallest N with N * per > ceiling
    Rational q = ceiling / per;
    BigInt fl = numerator(q) / denominator(q);
    return static_cast<int>(fl) + 1;
}

Rational lower_bound_scale(int q, int g, int n) {
    if (q < 1) throw Error(ErrorCode::PreconditionFailed, "q must be positive");
    if (euler_characteristic(g, n) >= 0) throw Error(ErrorCode::NonnegativeEuler, "scale needs chi < 0");
    return Rational(1, q * abs_euler(g, n));
}

}  // namespace torelli
