#include "doctest.h"
#include "oracles.hpp"
#include "torelli/errors.hpp"
#include "torelli/surface.hpp"

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
}  // namespace

TEST_SUITE("surface") {
    TEST_CASE("euler characteristic") {
        CHECK(euler_characteristic(2, 7) == -9);
        CHECK(euler_characteristic(0, 3) == -1);
        CHECK(euler_characteristic(10, 10) == -28);
        CHECK(PartitionedSurface(2, 7).euler() == -9);
    }

    TEST_CASE("surfaces with chi >= 0 are rejected") {
        CHECK(code_of([] { PartitionedSurface(0, 2); }) == ErrorCode::NonnegativeEuler);
        CHECK(code_of([] { PartitionedSurface(1, 0); }) == ErrorCode::NonnegativeEuler);
        CHECK(code_of([] { PartitionedSurface(2, 3, Partition::maximal(4)); }) == ErrorCode::UniverseMismatch);
    }

    TEST_CASE("validate_partition") {
        auto p = validate_partition(7, {{1, 2, 3}, {4, 5}, {6}, {7}});
        CHECK(p.size() == 4);
        CHECK(p.to_string() == "1,2,3|4,5|6|7");
        CHECK(p.block_of(5) == 1);
        CHECK(code_of([] { validate_partition(2, {{1}}); }) == ErrorCode::MissingLabel);
        CHECK(code_of([] { validate_partition(2, {{1, 2}, {2}}); }) == ErrorCode::OverlappingBlocks);
        CHECK(code_of([] { validate_partition(2, {{1, 2}, {}}); }) == ErrorCode::EmptyBlock);
        CHECK(code_of([] { validate_partition(2, {{1, 3}}); }) == ErrorCode::UnknownLabel);
    }

    TEST_CASE("partition text") {
        CHECK(parse_partition("7|6|4,5|3,2,1", 7).to_string() == "1,2,3|4,5|6|7");
        CHECK(parse_partition("b_1,b_2|b_3", 3).to_string() == "1,2|3");
        CHECK(parse_partition("", 3) == Partition::maximal(3));
        CHECK(code_of([] { parse_partition("1|1,2", 7); }) == ErrorCode::OverlappingBlocks);
        CHECK(code_of([] { parse_partition("1,x|2", 2); }) == ErrorCode::MalformedPartition);
        CHECK(code_of([] { parse_partition("1,2|", 2); }) == ErrorCode::EmptyBlock);
    }

    TEST_CASE("is_finer examples") {
        auto any = validate_partition(4, {{1, 3}, {2, 4}});
        CHECK(is_finer(Partition::maximal(4), any));
        CHECK(is_finer(any, any));
        CHECK_FALSE(is_finer(parse_partition("1|2,3", 3), parse_partition("1,2|3", 3)));
        CHECK(is_finer(parse_partition("1|2|3", 3), parse_partition("1,2,3", 3)));
        CHECK(code_of([] { is_finer(Partition::maximal(3), Partition::maximal(4)); }) == ErrorCode::UniverseMismatch);
    }

    TEST_CASE("capping targets") {
        CHECK(capped_genus(3, 5, Partition::maximal(5)) == 3);
        CHECK(capped_genus(2, 7, parse_partition("1,2,3|4,5|6|7", 7)) == 5);
        CHECK(capped_genus(2, 3, parse_partition("1,2|3", 3)) == 3);
        auto t = capping_target(PartitionedSurface(2, 7, parse_partition("1,2,3|4,5|6|7", 7)));
        CHECK(t.kind == CappingKind::Capped);
        CHECK(t.closed_genus == 5);
        auto pt = puncture_capping_target(PartitionedSurface(2, 7));
        CHECK(pt.kind == CappingKind::Punctured);
        CHECK(pt.closed_genus == 2);
        CHECK(pt.punctures == 7);
        CHECK(puncture_capping_target(PartitionedSurface(3, 1)).punctures == 1);
        CHECK(puncture_capping_target(PartitionedSurface(0, 3)).closed_genus == 0);
    }

    TEST_CASE("all_partitions enumerates Bell(n) distinct partitions") {
        auto bell = oracle::bell_numbers(8);
        for (int n = 1; n <= 8; ++n) {
            auto all = all_partitions(n);
            CHECK(all.size() == bell[n].convert_to<size_t>());
            std::set<std::string> seen;
            for (const auto& p : all) seen.insert(p.to_string());
            CHECK(seen.size() == all.size());
        }
    }

    TEST_CASE("property: is_finer agrees with the union oracle and is a partial order") {
        for (int trial = 0; trial < 300; ++trial) {
            int n = oracle::uniform(1, 8);
            auto a = oracle::random_blocks(n), b = oracle::random_blocks(n);
            auto c = oracle::random_refinement(a);
            auto pa = validate_partition(n, a), pb = validate_partition(n, b), pc = validate_partition(n, c);
            CHECK(is_finer(pa, pb) == oracle::refines(a, b));
            CHECK(is_finer(pa, pa));
            CHECK(is_finer(pc, pa));
            if (is_finer(pa, pb) && is_finer(pb, pa)) CHECK(pa == pb);
            // transitivity through a refinement chain
            auto d = oracle::random_refinement(c);
            CHECK(is_finer(validate_partition(n, d), pa));
            if (is_finer(pa, pb) && is_finer(pb, validate_partition(n, c))) CHECK(is_finer(pa, pc));
        }
    }

    TEST_CASE("property: chi bookkeeping of the capped surface") {
        for (int n = 1; n <= 8; ++n)
            for (int g = 0; g <= 3; ++g)
                for (const auto& p : all_partitions(n)) {
                    int caps = 0;
                    for (const auto& block : p.blocks()) caps += 2 - static_cast<int>(block.size());
                    CHECK(2 - 2 * capped_genus(g, n, p) == euler_characteristic(g, n) + caps);
                }
        for (int n = 1; n <= 8; ++n) {
            CHECK(capped_genus(2, n, Partition::maximal(n)) == 2);
            CHECK(capped_genus(2, n, Partition::coarsest(n)) == 2 + n - 1);
        }
    }
}
