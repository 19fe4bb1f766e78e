#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specht/common.hpp"
#include "specht/partition.hpp"

using namespace specht;

TEST_CASE("make_partition validates") {
    Partition mu = Partition::make({5, 1, 1});
    CHECK(mu.n() == 7);
    CHECK(mu.rows() == 3);
    CHECK_THROWS_AS(Partition::make({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::make({3, 0}), std::invalid_argument);
    CHECK(Partition::make({}).n() == 0);
}

TEST_CASE("parse and serialize round trip") {
    CHECK(Partition::parse("5,1,1") == Partition::make({5, 1, 1}));
    CHECK(Partition::parse("-") == Partition());
    CHECK(Partition::make({4, 2}).str() == "4,2");
    CHECK(Partition().str() == "-");
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("hook data decompositions") {
    HookData h = HookData::of(Partition::make({5, 1, 1}), 3);
    CHECK(h.a == 5);
    CHECK(h.b == 2);
    CHECK(h.d == 2);
    CHECK(h.r == 1);
    CHECK(h.u == 1);
    CHECK(h.a0 == 2);
    CHECK(h.v == 0);
    CHECK(h.b0 == 2);

    HookData h2 = HookData::of(Partition::make({2, 1, 1}), 2);
    CHECK(h2.a == 2);
    CHECK(h2.b == 2);
    CHECK(h2.d == 2);
    CHECK(h2.r == 0);
    CHECK(h2.u == 1);
    CHECK(h2.a0 == 0);
    CHECK(h2.v == 1);
    CHECK(h2.b0 == 0);

    CHECK_THROWS_AS(HookData::of(Partition::make({3, 2, 1}), 2), std::invalid_argument);
}

TEST_CASE("hook data reassembles the partition") {
    for (int n = 0; n <= 9; ++n) {
        if (n == 0) {
            HookData h = HookData::of(Partition(), 3);
            CHECK(h.partition() == Partition());
            continue;
        }
        for (const Partition& mu : hooks_of(n)) {
            HookData h = HookData::of(mu, 3);
            CHECK(h.partition() == mu);
            CHECK(h.a + h.b == n);
            CHECK(h.d * 3 + h.r == n);
        }
    }
}

TEST_CASE("p-core and weight, pinned values") {
    auto cw = p_core_weight(Partition::make({7, 1, 1, 1}), 3);
    CHECK(cw.core == Partition::make({1}));
    CHECK(cw.weight == 3);

    cw = p_core_weight(Partition::make({2, 1, 1}), 3);
    CHECK(cw.core == Partition::make({2, 1, 1}));
    CHECK(cw.weight == 0);

    cw = p_core_weight(Partition::make({1}), 2);
    CHECK(cw.core == Partition::make({1}));
    CHECK(cw.weight == 0);
}

TEST_CASE("rim hook oracle, pinned values") {
    auto cw = rim_hook_oracle(Partition::make({2, 2}), 2);
    CHECK(cw.core == Partition());
    CHECK(cw.weight == 2);

    cw = rim_hook_oracle(Partition::make({3, 2, 1}), 2);
    CHECK(cw.core == Partition::make({3, 2, 1}));
    CHECK(cw.weight == 0);

    cw = rim_hook_oracle(Partition::make({2}), 2);
    CHECK(cw.core == Partition());
    CHECK(cw.weight == 1);
}

TEST_CASE("abacus agrees with the rim hook oracle, n <= 8") {
    for (int p : {2, 3, 5})
        for (int n = 0; n <= 8; ++n)
            for (const Partition& mu : partitions_of(n)) {
                CoreWeight a = p_core_weight(mu, p);
                CoreWeight b = rim_hook_oracle(mu, p);
                CAPTURE(mu.str());
                CAPTURE(p);
                CHECK(a.core == b.core);
                CHECK(a.weight == b.weight);
                CHECK(a.core.n() + p * a.weight == n);
                CHECK(a.core.n() % p == n % p);
            }
}

TEST_CASE("specht dimension") {
    CHECK(specht_dimension(Partition::make({5, 1, 1})) == 15);
    CHECK(specht_dimension(Partition::make({7})) == 1);
    CHECK(specht_dimension(Partition::make({2, 2})) == 2);
    CHECK(specht_dimension(Partition()) == 1);
    // hooks: binomial(a+b-1, b)
    for (int n = 1; n <= 10; ++n)
        for (const Partition& mu : hooks_of(n))
            CHECK(specht_dimension(mu) == binomial(n - 1, mu.hook_leg()));
}

TEST_CASE("rim hook oracle scale guard") {
    CHECK_THROWS_AS(rim_hook_oracle(Partition::make({21}), 2), ScaleExceeded);
}
