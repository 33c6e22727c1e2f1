#include "doctest.h"
#include "oracles.hpp"
#include "torelli/errors.hpp"
#include "torelli/homology.hpp"
#include "torelli/penner.hpp"

using namespace torelli;

namespace {
MappingClass random_word(const std::vector<int>& letters, int max_len) {
    MappingClass w;
    int len = oracle::uniform(0, max_len);
    for (int i = 0; i < len; ++i)
        w.word.push_back({letters[oracle::uniform(0, static_cast<int>(letters.size()) - 1)], oracle::uniform(0, 1) ? 1 : -1});
    return w;
}

Int form(const IntMatrix& j, const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c) s += a[r] * j(r, c) * b[c];
    return s;
}
}  // namespace

TEST_SUITE("homology") {
    TEST_CASE("standard model ranks") {
        auto t = HomologyModel::standard(1, Partition::maximal(1));
        CHECK(t.relative_rank() == 2);
        CHECK(t.partitioned_rank() == 2);
        CHECK(t.capped_rank() == 2);
        // annulus with both ends in one block: one loop class and one arc class
        // survive, and capping the block gives a torus
        auto a = HomologyModel::standard(0, Partition::coarsest(2));
        CHECK(a.partitioned_rank() == 2);
        CHECK(a.capped_rank() == 2);
        CHECK(HomologyModel::standard(0, Partition::maximal(2)).partitioned_rank() == 0);
        for (int g = 0; g <= 3; ++g)
            for (int n = 1; n <= 4; ++n) {
                if (euler_characteristic(g, n) >= 0) continue;
                auto m = build_homology_model(PartitionedSurface(g, n));
                CHECK(m.relative_rank() == 2 * g + 2 * n - 2);
                CHECK(m.partitioned_rank() == 2 * g);
                CHECK(m.partitioned_torsion().empty());
            }
    }

    TEST_CASE("torus transvections follow x -> x + i(x, c) c") {
        auto m = HomologyModel::standard(1, Partition::maximal(1));
        int x = m.curve_id("x1"), y = m.curve_id("y1");
        auto j0 = standard_symplectic(1);
        // the capped basis is (x, y) with i(x, y) = +1
        CHECK(m.capped_action({}).matrix.is_identity());
        auto tx = m.capped_action(MappingClass::twist(x)).matrix;
        auto ty = m.capped_action(MappingClass::twist(y)).matrix;
        std::vector<Int> ex{1, 0}, ey{0, 1};
        CHECK(form(j0, ex, ey) == 1);
        // T_x(y) = y + i(y, x) x = y - x, T_y(x) = x + i(x, y) y = x + y
        CHECK(tx.column(1) == std::vector<Int>{-1, 1});
        CHECK(tx.column(0) == ex);
        CHECK(ty.column(0) == std::vector<Int>{1, 1});
        CHECK(ty.column(1) == ey);
        auto back = m.capped_action(MappingClass::twist(x, 1).then(MappingClass::twist(x, -1))).matrix;
        CHECK(back.is_identity());
        CHECK(transvection(m, x, 1).matrix * transvection(m, x, -1).matrix == IntMatrix::identity(2));
        CHECK_THROWS_AS(transvection(m, 99, 1), Error);
    }

    TEST_CASE("transvections by disjoint classes commute") {
        auto m = HomologyModel::standard(2, Partition::maximal(2));
        int x1 = m.curve_id("x1"), x2 = m.curve_id("x2"), y2 = m.curve_id("y2");
        auto a = m.capped_action(MappingClass::twist(x1).then(MappingClass::twist(x2))).matrix;
        auto b = m.capped_action(MappingClass::twist(x2).then(MappingClass::twist(x1))).matrix;
        CHECK(a == b);
        auto c = m.capped_action(MappingClass::twist(x2).then(MappingClass::twist(y2))).matrix;
        auto d = m.capped_action(MappingClass::twist(y2).then(MappingClass::twist(x2))).matrix;
        CHECK_FALSE(c == d);
    }

    TEST_CASE("Lefschetz numbers") {
        auto m = HomologyModel::standard(3, Partition::maximal(1));
        CHECK(lefschetz_number(m.capped_action({})) == -4);
        CHECK_THROWS_AS(lefschetz_number(m.act({})), Error);
        auto t = HomologyModel::standard(1, Partition::maximal(1));
        auto tx = t.capped_action(MappingClass::twist(t.curve_id("x1")));
        CHECK(lefschetz_number(tx) == 0);
        auto s = build_penner_system(4, 3);
        auto f = make_penner_class(s);
        auto a = capped_action(s, f, Partition::maximal(3));
        CHECK(a.matrix.is_identity());
        CHECK(lefschetz_number(a) == -6);
    }

    TEST_CASE("separating and nonseparating twists on the generated system") {
        auto s = build_penner_system(4, 4);
        auto m = build_homology_model(s, Partition::maximal(4));
        CHECK(m.act({}).matrix.is_identity());
        CHECK(m.acts_trivially(MappingClass::twist(s.delta)));
        CHECK(m.act(MappingClass::twist(s.delta)).matrix.is_identity());
        CHECK(m.capped_action(MappingClass::twist(s.delta)).matrix.is_identity());
        auto probe = MappingClass::twist(s.probe);
        CHECK_FALSE(m.acts_trivially(probe));
        auto pm = m.capped_action(probe).matrix;
        CHECK_FALSE(pm.is_identity());
        // a transvection: M - I has rank one
        CHECK(smith_normal_form(pm - IntMatrix::identity(pm.rows())).rank() == 1);
        CHECK_THROWS_AS(transvection(m, s.gamma, 1), Error);
    }

    TEST_CASE("f on the finest partition") {
        for (auto [g, n] : std::vector<std::pair<int, int>>{{4, 2}, {4, 7}, {5, 6}, {6, 3}}) {
            auto s = build_penner_system(g, n);
            auto f = make_penner_class(s);
            CHECK(is_torelli(s, f, Partition::maximal(n)));
            auto c = verify_capping_consistency(s, f, Partition::maximal(n));
            CHECK(c.agree());
            CHECK(c.symplectic);
            CHECK(finer_containment_check(s, f, Partition::coarsest(n), Partition::maximal(n)));
        }
    }

    TEST_CASE("finer containment needs a refinement") {
        auto s = build_penner_system(4, 3);
        auto f = make_penner_class(s);
        CHECK_THROWS_AS(finer_containment_check(s, f, Partition::maximal(3), Partition::coarsest(3)), Error);
        CHECK(finer_containment_check(s, MappingClass::twist(s.probe), Partition::coarsest(3), Partition::maximal(3)));
    }

    TEST_CASE("capping consistency for probe and empty words") {
        auto s = build_penner_system(4, 4);
        for (const auto& p : all_partitions(4)) {
            auto m = build_homology_model(s, p);
            auto probe = verify_capping_consistency(m, MappingClass::twist(s.probe));
            CHECK(probe.agree());
            CHECK_FALSE(probe.partitioned_trivial);
            auto e = verify_capping_consistency(m, {});
            CHECK(e.agree());
            CHECK(e.partitioned_trivial);
        }
    }

    TEST_CASE("a boundary twist is Torelli exactly when its block is a singleton") {
        for (int n : {3, 4, 5}) {
            auto s = build_penner_system(4, n);
            for (const auto& p : all_partitions(n))
                for (int label = 1; label <= n; ++label) {
                    int d = s.find("d" + std::to_string(label));
                    bool single = p.blocks()[p.block_of(label)].size() == 1;
                    auto m = build_homology_model(s, p);
                    auto c = verify_capping_consistency(m, MappingClass::twist(d));
                    CHECK(c.partitioned_trivial == single);
                    CHECK(c.agree());
                }
        }
    }

    TEST_CASE("property: partitioned rank is twice the capped genus") {
        for (int n = 2; n <= 6; ++n) {
            auto s = build_penner_system(4, n);
            for (const auto& p : all_partitions(n)) {
                auto m = build_homology_model(s, p);
                CHECK(m.relative_rank() == 2 * 4 + 2 * n - 2);
                CHECK(m.partitioned_rank() == 2 * capped_genus(4, n, p));
                CHECK(m.capped_rank() == 2 * capped_genus(4, n, p));
            }
        }
    }

    TEST_CASE("property: capped form, symplectic actions and transvection shape") {
        for (int trial = 0; trial < 12; ++trial) {
            int g = oracle::uniform(4, 6), n = oracle::uniform(2, 5);
            auto s = build_penner_system(g, n);
            auto p = validate_partition(n, oracle::random_blocks(n));
            auto m = build_homology_model(s, p);
            const auto& J = m.capped_form();
            CHECK(is_antisymmetric(J));
            CHECK(std::abs(determinant(J)) == 1);
            std::vector<int> letters = m.curve_ids();
            for (int rep = 0; rep < 5; ++rep) {
                auto w = random_word(letters, 20);
                auto M = m.capped_matrix(w);
                CHECK(M.transpose() * J * M == J);
                auto A = m.capped_action(w).matrix;
                CHECK(A.transpose() * standard_symplectic(capped_genus(g, n, p)) * A ==
                      standard_symplectic(capped_genus(g, n, p)));
            }
            for (int c : letters) {
                auto lam = m.capped_class(c);
                for (int sign : {1, -1}) {
                    auto M = m.capped_matrix(MappingClass::twist(c, sign));
                    // T_c(v) = v + sign * i(v, c) * c
                    for (int i = 0; i < M.cols(); ++i) {
                        std::vector<Int> e(M.rows(), 0);
                        e[i] = 1;
                        Int k = sign * form(J, e, lam);
                        auto col = M.column(i);
                        for (int r = 0; r < M.rows(); ++r) CHECK(col[r] == e[r] + k * lam[r]);
                    }
                }
            }
        }
    }
}
