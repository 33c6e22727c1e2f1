#include "doctest.h"
#include "torelli/bounds.hpp"
#include "torelli/curve_system.hpp"
#include "torelli/errors.hpp"
#include "torelli/surface.hpp"

using namespace torelli;

TEST_SUITE("bounds") {
    TEST_CASE("lower threshold") {
        CHECK(gadre_tsai_threshold(2, 1) == Rational(1, 242));
        CHECK(gadre_tsai_threshold(1, 1) == Rational(1, 38));
        CHECK(gadre_tsai_threshold(4, 7) == Rational(1, 3362));
        CHECK_THROWS_AS(gadre_tsai_threshold(0, 0), Error);
        CHECK_THROWS_AS(gadre_tsai_threshold(1, 0), Error);
    }

    TEST_CASE("upper chain on a large cell") {
        auto r = bound_chain_verify(10, 12, 4);
        CHECK(r.certified == Rational(1, 2));
        CHECK(r.final_domain_ok);
        REQUIRE(r.chain_final);
        CHECK(*r.chain_final == Rational(32, 30 - 18));
        REQUIRE(r.end_to_end);
        CHECK(*r.end_to_end);
        CHECK(r.all_defined_hold());
        CHECK(r.links.size() == r.steps.size() + 1);
        for (const auto& s : r.steps) {
            REQUIRE(s.verdict);
            CHECK(*s.verdict);
        }
        REQUIRE(r.threshold_below_final);
        CHECK(*r.threshold_below_final);
    }

    TEST_CASE("small cells fall outside the final domain") {
        auto r = bound_chain_verify(4, 7, 2);
        CHECK_FALSE(r.final_domain_ok);
        CHECK(r.certified == Rational(1));
        CHECK_THROWS_AS(bound_chain_verify(4, 7, 0), Error);
        CHECK_THROWS_AS(bound_chain_verify(3, 7, 1), Error);
    }

    TEST_CASE("odd genus uses the short chain") {
        auto r = bound_chain_verify(11, 12, 5);
        CHECK(r.links.size() == 3);
        CHECK(r.steps.back().relation == "<=");
        auto e = bound_chain_verify(10, 12, 4);
        CHECK(e.links.size() == 8);
        CHECK(e.steps.back().relation == "=");
    }

    TEST_CASE("monogon and branch formulas") {
        CHECK(euler_poincare_monogon_bound(0, 12, 0) == Rational(8));
        CHECK(euler_poincare_monogon_bound(1, 4, 0) == Rational(2));
        CHECK(euler_poincare_monogon_bound(4, 0, 4) == Rational(-8));
        CHECK_THROWS_AS(euler_poincare_monogon_bound(1, 4, -1), Error);
        auto b = epsilon_monogon_bound(1, 16, 0, Rational(1, 8));
        CHECK(b.bound == Rational(6));
        CHECK(b.hypothesis_ok);
        CHECK_FALSE(epsilon_monogon_bound(4, 8, 0, Rational(1, 8)).hypothesis_ok);
        for (auto eps : {Rational(0), Rational(1, 4), Rational(-1, 3)}) {
            try {
                epsilon_monogon_bound(1, 8, 0, eps);
                FAIL("accepted bad epsilon");
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::BadEpsilon);
            }
        }
        CHECK(real_branch_bound(0, 4) == 18);
        CHECK(real_branch_bound(1, 2) == 18);
        CHECK(real_branch_bound(4, 2) == 72);
        try {
            real_branch_bound(0, 2);
            FAIL("accepted annulus");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonnegativeEuler);
        }
    }

    TEST_CASE("branch counting") {
        auto c = branch_counting_contradiction(1, 40, Rational(1, 8), 10, BranchCase::Bigon);
        CHECK(c.branches == Rational(50));
        CHECK(c.ceiling == 9 * 40);
        REQUIRE(c.regime_ceiling);
        CHECK(*c.regime_ceiling == 9 * Rational(58));
        CHECK_FALSE(c.fires);
        auto m = branch_counting_contradiction(1, 40, Rational(1, 8), 10, BranchCase::Monogon);
        CHECK(m.branches == Rational(35));
        CHECK_THROWS_AS(branch_counting_contradiction(1, 40, Rational(1, 8), -1, BranchCase::Bigon), Error);
    }

    TEST_CASE("property: minimal contradicting N matches a linear search") {
        for (int g = 0; g <= 5; ++g)
            for (int n = 3; n <= 30; n += 3)
                for (auto eps : {Rational(1, 8), Rational(1, 5), Rational(3, 13)})
                    for (auto bc : {BranchCase::Monogon, BranchCase::Bigon}) {
                        if (euler_characteristic(g, n) >= 0) continue;
                        int N = 0;
                        while (!branch_counting_contradiction(g, n, eps, N, bc).fires) ++N;
                        CHECK(minimal_contradicting_N(g, n, eps, bc) == N);
                    }
    }

    TEST_CASE("lower bound scale") {
        CHECK(lower_bound_scale(2, 0, 3) == Rational(1, 2));
        CHECK(lower_bound_scale(3, 0, 5) == Rational(1, 9));
        CHECK_THROWS_AS(lower_bound_scale(0, 0, 3), Error);
        CHECK_THROWS_AS(lower_bound_scale(1, 0, 2), Error);
    }

    TEST_CASE("property: chain coherence over the grid") {
        for (int g = 4; g <= 16; ++g)
            for (int n = 2; n <= 12; ++n) {
                auto p = construction_parameters(g, n);
                auto r = bound_chain_verify(g, n, p.N_claim);
                INFO(g << "," << n);
                CHECK(r.links[1].value == Rational(2, p.N_claim));
                CHECK(r.final_domain_ok == (-euler_characteristic(g, n) > 18));
                CHECK(r.chain_final.has_value() == r.final_domain_ok);
                REQUIRE(r.threshold);
                CHECK(*r.threshold > 0);
                if (r.final_domain_ok) {
                    CHECK(*r.threshold_below_final);
                    CHECK(*r.threshold < r.certified);
                }
                // each evaluated step matches the exact comparison of its links
                for (size_t i = 0; i < r.steps.size(); ++i) {
                    const auto& a = r.links[i].value;
                    const auto& b = r.links[i + 1].value;
                    CHECK(r.steps[i].verdict.has_value() == (a && b));
                }
            }
    }
}
