#include "torelli/penner.hpp"

#include <algorithm>
#include <cmath>

#include "torelli/errors.hpp"

namespace torelli {

MappingClass make_penner_class(const CurveSystem& s) {
    if (!check_family_disjointness(s)) throw Error(ErrorCode::FamilyOverlap, "A and B are not multicurves");
    if (!check_filling(s)) throw Error(ErrorCode::NotFilling, "A and B do not fill");
    MappingClass f;
    for (int a : s.family(Family::A)) f.word.push_back({a, 1});
    for (int b : s.family(Family::B)) f.word.push_back({b, -1});
    return f;
}

WeightVector unit_weight(const CurveSystem& s, int curve) {
    s.curve(curve);
    WeightVector w(s.curve_count(), 0);
    w[curve] = 1;
    return w;
}

WeightVector twist_weight_step(const CurveSystem& s, const WeightVector& w, int curve, int sign) {
    const Curve& c = s.curve(curve);
    if (c.role != CurveRole::Chain) throw Error(ErrorCode::UnknownCurve, c.name + " is not a twisting curve");
    if (sign != 1 && sign != -1) throw Error(ErrorCode::PreconditionFailed, "twist sign must be +1 or -1");
    WeightVector out = w;
    for (int d : s.chain)
        if (s.intersections[curve][d]) out[curve] += s.intersections[curve][d] * w[d];
    return out;
}

WeightVector apply_class(const CurveSystem& s, const WeightVector& w, const MappingClass& f) {
    WeightVector x = w;
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) {
        int sign = it->power > 0 ? 1 : -1;
        for (int r = 0; r < std::abs(it->power); ++r) x = twist_weight_step(s, x, it->curve, sign);
    }
    return x;
}

std::vector<int> support(const WeightVector& w) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != 0) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> support_orbit(const CurveSystem& s, const MappingClass& f, int start, int steps) {
    if (steps < 0) throw Error(ErrorCode::PreconditionFailed, "negative step count");
    WeightVector w = unit_weight(s, start);
    std::vector<std::vector<int>> out{support(w)};
    for (int j = 0; j < steps; ++j) {
        w = apply_class(s, w, f);
        out.push_back(support(w));
    }
    return out;
}

std::vector<int> schedule_window(const CurveSystem& s, int step) {
    const auto& p = s.params;
    const int d = ceil_div(p.l, 2);
    const int b_steps = p.n / 4;
    int lo, hi;
    if (step <= b_steps) {
        int w = 2 * step - 1 + ((p.n / 2) % 2 == 1 ? 1 : 0);
        lo = s.chain_position(s.find("b" + std::to_string(std::max(1, d - w))));
        hi = s.chain_position(s.find("b" + std::to_string(std::min(p.l, d + w))));
    } else {
        int i = step - b_steps;
        lo = s.chain_position(s.find("a" + std::to_string(std::min(p.k, 2 * i - 1))));
        hi = static_cast<int>(s.chain.size()) - 1;
    }
    std::vector<int> out;
    for (int pos = lo; pos <= hi; ++pos) out.push_back(s.chain[pos]);
    std::sort(out.begin(), out.end());
    return out;
}

ScheduleReport containment_schedule_check(const CurveSystem& s, const MappingClass& f) {
    ScheduleReport r;
    auto orbit = support_orbit(s, f, s.delta, s.params.N_claim);
    for (int j = 1; j <= s.params.N_claim; ++j) {
        auto window = schedule_window(s, j);
        const auto& sup = orbit[j];
        bool inside = std::includes(window.begin(), window.end(), sup.begin(), sup.end());
        if (!inside && r.passes) {
            r.passes = false;
            r.first_violation = j;
        }
        r.supports.push_back(sup);
        r.windows.push_back(window);
        r.tight.push_back(sup == window);
    }
    r.first_window_size = r.supports.empty() ? 0 : static_cast<int>(r.supports[0].size());
    return r;
}

DistanceCertificate certify_distance_two(const CurveSystem& s, const MappingClass& f, int N) {
    if (N < 1) throw Error(ErrorCode::PreconditionFailed, "N must be positive");
    DistanceCertificate c;
    c.g = s.params.g;
    c.n = s.params.n;
    c.partition = s.surface.partition().to_string();
    c.params = s.params;
    c.delta = s.delta;
    c.gamma = s.gamma;
    c.N = N;
    c.trace = support_orbit(s, f, s.delta, N);
    for (int id : c.trace.back()) {
        int i = s.intersections[s.gamma][id];
        c.terminal_checks.emplace_back(id, i);
        if (i != 0)
            throw Error(ErrorCode::DisjointnessFailed,
                        "gamma meets " + s.curves[id].name + " in the support of f^" + std::to_string(N) + "(delta)");
    }
    if (s.gamma_cycle.witness_basis < 0) throw Error(ErrorCode::DisjointnessFailed, "gamma has no essential witness");
    c.bound = Rational(2, N);
    c.chain = bound_chain_verify(c.g, c.n, N);
    return c;
}

int largest_certified_N(const CurveSystem& s, const MappingClass& f, int cap) {
    int best = 0;
    auto orbit = support_orbit(s, f, s.delta, cap);
    for (int N = 1; N <= cap; ++N) {
        bool ok = true;
        for (int id : orbit[N])
            if (s.intersections[s.gamma][id] != 0) ok = false;
        if (!ok) break;  // supports only grow
        best = N;
    }
    return best;
}

TransitionMatrix transition_matrix(const CurveSystem& s, const MappingClass& f) {
    TransitionMatrix t;
    for (int id : s.chain)
        if (s.active[id]) t.ids.push_back(id);
    std::sort(t.ids.begin(), t.ids.end());
    const size_t n = t.ids.size();
    t.m.assign(n, std::vector<BigInt>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        auto w = apply_class(s, unit_weight(s, t.ids[j]), f);
        for (size_t i = 0; i < n; ++i) t.m[i][j] = w[t.ids[i]];
    }
    return t;
}

namespace {

using BoolMatrix = std::vector<std::vector<char>>;

BoolMatrix pattern(const BigMatrix& m) {
    BoolMatrix b(m.size(), std::vector<char>(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            if (m[i][j] < 0) throw Error(ErrorCode::PreconditionFailed, "matrix has a negative entry");
            b[i][j] = m[i][j] != 0;
        }
    return b;
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
    const size_t n = a.size();
    BoolMatrix c(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (size_t j = 0; j < n; ++j) c[i][j] |= b[k][j];
    return c;
}

void require_square(const BigMatrix& m) {
    if (m.empty()) throw Error(ErrorCode::PreconditionFailed, "empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw Error(ErrorCode::PreconditionFailed, "matrix is not square");
}

}  // namespace

int positive_diagonal_power(const BigMatrix& m, int cap) {
    require_square(m);
    BoolMatrix base = pattern(m), p = base;
    for (int q = 1; q <= cap; ++q) {
        for (size_t i = 0; i < m.size(); ++i)
            if (p[i][i]) return q;
        p = bool_mul(p, base);
    }
    throw Error(ErrorCode::CapExceeded, "no positive diagonal entry up to power " + std::to_string(cap));
}

std::optional<int> primitivity_exponent(const BigMatrix& m) {
    require_square(m);
    const int n = static_cast<int>(m.size());
    BoolMatrix base = pattern(m), p = base;
    const int bound = (n - 1) * (n - 1) + 1;
    for (int q = 1; q <= bound; ++q) {
        bool all = true;
        for (const auto& row : p)
            for (char x : row) all = all && x;
        if (all) return q;
        p = bool_mul(p, base);
    }
    return std::nullopt;
}

PerronInterval perron_estimate(const BigMatrix& m, const Rational& tol, int max_iterations) {
    require_square(m);
    if (tol <= 0) throw Error(ErrorCode::PreconditionFailed, "tolerance must be positive");
    if (!primitivity_exponent(m)) throw Error(ErrorCode::NotPrimitive, "matrix is not primitive");
    const size_t n = m.size();
    // floating start vector, then exact iteration
    std::vector<long double> v(n, 1.0L);
    for (int it = 0; it < 5000; ++it) {
        std::vector<long double> y(n, 0.0L);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) y[i] += static_cast<long double>(m[i][j]) * v[j];
        long double mx = *std::max_element(y.begin(), y.end());
        long double diff = 0;
        for (size_t i = 0; i < n; ++i) {
            y[i] /= mx;
            diff = std::max(diff, std::fabs(y[i] - v[i]));
        }
        v = y;
        if (diff < 1e-18L) break;
    }
    std::vector<BigInt> x(n);
    for (size_t i = 0; i < n; ++i) {
        BigInt xi(static_cast<long long>(std::ldexp(v[i], 60)));
        x[i] = xi > 0 ? xi : BigInt(1);
    }
    PerronInterval out;
    bool have = false;
    for (int it = 1; it <= max_iterations; ++it) {
        std::vector<BigInt> y(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (m[i][j] != 0) y[i] += m[i][j] * x[j];
        Rational lo(y[0], x[0]), hi = lo;
        for (size_t i = 1; i < n; ++i) {
            Rational r(y[i], x[i]);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (!have || lo > out.lower) out.lower = lo;
        if (!have || hi < out.upper) out.upper = hi;
        have = true;
        out.iterations = it;
        if (out.upper - out.lower <= tol) return out;
        // keep the iterate short; any positive vector gives valid bounds
        unsigned bits = msb(*std::max_element(y.begin(), y.end()));
        if (bits > 512) {
            unsigned shift = bits - 384;
            for (auto& yi : y) {
                yi >>= shift;
                if (yi == 0) yi = 1;
            }
        }
        x = std::move(y);
    }
    throw Error(ErrorCode::CapExceeded, "Perron interval did not reach the tolerance");
}

}  // namespace torelli
