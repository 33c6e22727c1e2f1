#include "doctest.h"
#include "oracles.hpp"
#include "torelli/errors.hpp"
#include "torelli/penner.hpp"

#include <deque>

using namespace torelli;

namespace {
ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::PreconditionFailed;
}

std::vector<int> names_to_ids(const CurveSystem& s, const std::vector<std::string>& names) {
    std::vector<int> ids;
    for (const auto& nm : names) ids.push_back(s.find(nm));
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> b_range(int lo, int hi) {
    std::vector<std::string> out;
    for (int i = lo; i <= hi; ++i) out.push_back("b" + std::to_string(i));
    return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<std::vector<int>> adjacency_matrix(const CurveSystem& s) {
    std::vector<std::vector<int>> adj(s.curve_count(), std::vector<int>(s.curve_count(), 0));
    for (int c : s.chain)
        for (int d : s.chain) adj[c][d] = s.intersections[c][d] > 0;
    return adj;
}

std::vector<char> families(const CurveSystem& s) {
    std::vector<char> f(s.curve_count(), '-');
    for (int c : s.chain) f[c] = s.curves[c].family == Family::A ? 'A' : 'B';
    return f;
}

int chain_diameter(const CurveSystem& s) {
    auto adj = adjacency_graph(s);
    int best = 0;
    for (int c : s.chain) {
        std::map<int, int> dist{{c, 0}};
        std::deque<int> q{c};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[x])
                if (!dist.count(y)) dist[y] = dist[x] + 1, q.push_back(y);
        }
        for (auto [y, d] : dist) best = std::max(best, d);
    }
    return best;
}
}  // namespace

TEST_SUITE("penner") {
    TEST_CASE("canonical class") {
        auto s = build_penner_system(4, 7);
        auto f = make_penner_class(s);
        CHECK(f.word.size() == s.family(Family::A).size() + s.family(Family::B).size());
        for (const auto& l : f.word) CHECK(l.power == (s.curves[l.curve].family == Family::A ? 1 : -1));
        CHECK(code_of([&] { make_penner_class(s.without(s.find("b2"))); }) == ErrorCode::NotFilling);
        CHECK(code_of([&] { make_penner_class(s.with_family(s.find("a1"), Family::B)); }) == ErrorCode::FamilyOverlap);
    }

    TEST_CASE("single twist weight steps") {
        auto s = build_penner_system(4, 7);
        auto w = unit_weight(s, s.delta);
        CHECK(twist_weight_step(s, w, s.delta, 1) == w);
        int nb = s.find("b4");
        auto w2 = twist_weight_step(s, w, nb, -1);
        CHECK(w2[nb] == 2);
        CHECK(w2[s.delta] == 1);
        WeightVector zero(s.curve_count(), 0);
        CHECK(twist_weight_step(s, zero, nb, 1) == zero);
        CHECK(code_of([&] { twist_weight_step(s, w, s.probe, 1); }) == ErrorCode::UnknownCurve);
        CHECK(apply_class(s, w, MappingClass{}) == w);
    }

    TEST_CASE("first images of delta") {
        // floor(n/2) odd: five curves
        auto s7 = build_penner_system(4, 7);
        auto f7 = make_penner_class(s7);
        CHECK(support(apply_class(s7, unit_weight(s7, s7.delta), f7)) == names_to_ids(s7, b_range(1, 5)));
        // floor(n/2) even: three curves around b_{ceil(l/2)}, then seven
        auto s = build_penner_system(4, 12);
        auto f = make_penner_class(s);
        CHECK(s.curve(s.delta).name == "b6");
        auto w1 = apply_class(s, unit_weight(s, s.delta), f);
        CHECK(support(w1) == names_to_ids(s, b_range(5, 7)));
        auto w2 = apply_class(s, w1, f);
        CHECK(subset(support(w2), names_to_ids(s, b_range(3, 9))));
        auto s8 = build_penner_system(4, 8);
        auto f8 = make_penner_class(s8);
        CHECK(support(apply_class(s8, unit_weight(s8, s8.delta), f8)) == names_to_ids(s8, b_range(3, 5)));
    }

    TEST_CASE("support orbits") {
        auto s = build_penner_system(10, 12);
        auto f = make_penner_class(s);
        auto orbit = support_orbit(s, f, s.delta, s.params.N_claim);
        CHECK(orbit[0] == std::vector<int>{s.delta});
        CHECK(subset(orbit[12 / 4], names_to_ids(s, b_range(1, s.params.l))));
        for (int c : orbit.back()) CHECK(s.intersections[s.gamma][c] == 0);
        CHECK(code_of([&] { support_orbit(s, f, s.delta, -1); }) == ErrorCode::PreconditionFailed);
    }

    TEST_CASE("containment schedule") {
        auto even = build_penner_system(4, 8);
        auto r = containment_schedule_check(even, make_penner_class(even));
        CHECK(r.passes);
        CHECK(r.first_window_size == 3);
        auto odd = build_penner_system(5, 6);
        auto r2 = containment_schedule_check(odd, make_penner_class(odd));
        CHECK(r2.passes);
        CHECK(r2.first_window_size == 5);
        CHECK(r2.windows[0] == names_to_ids(odd, b_range(1, 5)));
        // a chord from delta to the far end of the a-chain breaks the first window
        auto s = build_penner_system(10, 12);
        int far = s.find("a" + std::to_string(s.params.k));
        auto bad = s.with_extra_intersection(s.delta, far, 2);
        auto r3 = containment_schedule_check(bad, make_penner_class(s));
        CHECK_FALSE(r3.passes);
        CHECK(r3.first_violation == 1);
    }

    TEST_CASE("distance certificates") {
        auto s = build_penner_system(10, 12);
        auto f = make_penner_class(s);
        auto c = certify_distance_two(s, f, 4);
        CHECK(c.bound == Rational(1, 2));
        CHECK(c.trace.size() == 5);
        for (auto [id, i] : c.terminal_checks) CHECK(i == 0);
        CHECK(largest_certified_N(s, f, 64) >= 4);
        auto s7 = build_penner_system(4, 7);
        auto f7 = make_penner_class(s7);
        auto c7 = certify_distance_two(s7, f7, 2);
        CHECK(c7.bound == Rational(1));
        CHECK_FALSE(c7.chain.final_domain_ok);
        CHECK(largest_certified_N(s7, f7, 64) == 2);
        CHECK(code_of([&] { certify_distance_two(s7, f7, 0); }) == ErrorCode::PreconditionFailed);
        auto hit = s7.with_extra_intersection(s7.gamma, s7.delta, 2);
        CHECK(code_of([&] { certify_distance_two(hit, f7, 1); }) == ErrorCode::DisjointnessFailed);
        CHECK(largest_certified_N(hit, f7, 64) == 0);
    }

    TEST_CASE("transition matrix") {
        auto s = build_penner_system(4, 7);
        auto f = make_penner_class(s);
        auto t = transition_matrix(s, f);
        auto col = std::find(t.ids.begin(), t.ids.end(), s.delta) - t.ids.begin();
        auto w = apply_class(s, unit_weight(s, s.delta), f);
        for (size_t i = 0; i < t.ids.size(); ++i) CHECK(t.m[i][col] == w[t.ids[i]]);
        for (size_t i = 0; i < t.ids.size(); ++i) {
            CHECK(t.m[i][i] >= 1);
            for (const auto& x : t.m[i]) CHECK(x >= 0);
        }
        CHECK(positive_diagonal_power(t.m, 10) == 1);
        // some power at most diameter + 2 is positive, by exact products
        int bound = chain_diameter(s) + 2;
        auto power = t.m;
        bool positive = false;
        for (int q = 1; q <= bound && !positive; ++q) {
            positive = true;
            for (const auto& row : power)
                for (const auto& x : row) positive = positive && x > 0;
            if (!positive) power = oracle::multiply(power, t.m);
        }
        CHECK(positive);
        auto e = primitivity_exponent(t.m);
        REQUIRE(e);
        CHECK(*e <= bound);
    }

    TEST_CASE("diagonal powers") {
        BigMatrix d{{1, 0}, {0, 0}};
        CHECK(positive_diagonal_power(d, 5) == 1);
        BigMatrix cyc{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
        CHECK(positive_diagonal_power(cyc, 5) == 3);
        CHECK_FALSE(primitivity_exponent(cyc));
        BigMatrix zero{{0, 0}, {0, 0}};
        CHECK(code_of([&] { positive_diagonal_power(zero, 10); }) == ErrorCode::CapExceeded);
        BigMatrix neg{{1, -1}, {0, 1}};
        CHECK(code_of([&] { positive_diagonal_power(neg, 10); }) == ErrorCode::PreconditionFailed);
    }

    TEST_CASE("Perron intervals") {
        BigMatrix m{{2, 1}, {1, 1}};
        auto r = perron_estimate(m, Rational(1, 1000000000));
        CHECK(r.upper - r.lower <= Rational(1, 1000000000));
        // (3 + sqrt 5) / 2 is the larger root of x^2 - 3x + 1
        auto q = [](const Rational& x) { return x * x - 3 * x + 1; };
        CHECK(q(r.lower) <= 0);
        CHECK(q(r.upper) >= 0);
        CHECK(r.lower > Rational(2));
        BigMatrix id{{1, 0}, {0, 1}};
        CHECK(code_of([&] { perron_estimate(id, Rational(1, 1000)); }) == ErrorCode::NotPrimitive);
        auto s = build_penner_system(4, 7);
        auto t = transition_matrix(s, make_penner_class(s));
        auto pr = perron_estimate(t.m, Rational(1, 1000000000));
        CHECK(pr.lower > 1);
        CHECK(pr.upper - pr.lower <= Rational(1, 1000000000));
    }

    TEST_CASE("property: monotone supports follow two-ply growth") {
        for (int g = 4; g <= 8; ++g)
            for (int n = 2; n <= 10; ++n) {
                auto s = build_penner_system(g, n);
                auto f = make_penner_class(s);
                auto adj = adjacency_matrix(s);
                auto fam = families(s);
                auto w = unit_weight(s, s.delta);
                std::set<int> predicted{s.delta};
                for (int step = 1; step <= s.params.N_claim + 2; ++step) {
                    auto next = apply_class(s, w, f);
                    for (size_t i = 0; i < w.size(); ++i) CHECK(next[i] >= w[i]);
                    predicted = oracle::two_ply(predicted, adj, fam);
                    auto sup = support(next);
                    INFO(g << "," << n << " step " << step);
                    CHECK(std::set<int>(sup.begin(), sup.end()) == predicted);
                    w = next;
                }
            }
    }

    TEST_CASE("property: apply_class is the transition matrix") {
        for (auto [g, n] : std::vector<std::pair<int, int>>{{4, 7}, {7, 4}, {10, 12}}) {
            auto s = build_penner_system(g, n);
            auto f = make_penner_class(s);
            auto t = transition_matrix(s, f);
            for (int trial = 0; trial < 100; ++trial) {
                WeightVector w(s.curve_count(), 0);
                for (int id : t.ids) w[id] = oracle::uniform(0, 50);
                auto image = apply_class(s, w, f);
                for (size_t i = 0; i < t.ids.size(); ++i) {
                    BigInt sum = 0;
                    for (size_t j = 0; j < t.ids.size(); ++j) sum += t.m[i][j] * w[t.ids[j]];
                    CHECK(image[t.ids[i]] == sum);
                }
            }
        }
    }
}
