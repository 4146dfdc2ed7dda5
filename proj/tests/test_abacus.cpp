#include <doctest.h>

#include <set>

#include "mckay/abacus.hpp"

using namespace mckay;

TEST_CASE("beta set validation and round trips") {
    CHECK_THROWS_AS(BetaSet({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet({-1}), std::invalid_argument);

    const Partition lambda({3, 2, 2});
    const BetaSet x = firstColumnBetaSet(lambda);
    CHECK(x == BetaSet({5, 3, 2}));
    CHECK(partitionOf(x) == lambda);

    // shifting never changes the partition
    const BetaSet y = shift(x, 2);
    CHECK(y == BetaSet({7, 5, 4, 1, 0}));
    CHECK(partitionOf(y) == lambda);

    for (const Partition& mu : {Partition(), Partition({4, 4, 1}), Partition({7})})
        for (int s : {0, 1, 3})
            CHECK(partitionOf(shift(firstColumnBetaSet(mu), s)) == mu);
}

TEST_CASE("hook removal on the abacus") {
    // removing H(bead, gap) strips a hook of length bead - gap
    const Partition lambda({4, 3, 1});
    const BetaSet x = firstColumnBetaSet(lambda);  // {6,4,1}
    CHECK(x == BetaSet({6, 4, 1}));

    const BetaSet after = removeHook(x, 6, 3);
    CHECK(partitionOf(after).size() == lambda.size() - 3);

    CHECK_THROWS_AS(removeHook(x, 5, 3), std::invalid_argument);  // 5 not a bead
    CHECK_THROWS_AS(removeHook(x, 6, 4), std::invalid_argument);  // 4 occupied
    CHECK_THROWS_AS(removeHook(x, 1, 6), std::invalid_argument);  // not a removal

    // node coordinates agree with the direct hook table
    const Hook h = hookFromBetaPair(x, 6, 3);
    CHECK(h.row == 1);
    CHECK(h.length() == 3);
    const auto [bead, gap] = betaPairOfNode(lambda, 1, 2);
    CHECK(bead - gap == hookLengths(lambda)[0][1]);
}

TEST_CASE("cores") {
    CHECK(isCore(Partition({2, 1}), 5));
    CHECK(isCore(Partition({1, 1}), 3));
    CHECK_FALSE(isCore(Partition({5}), 5));
    CHECK_FALSE(isCore(Partition({3, 1}), 2));
    // an r-core is exactly a partition with no hook of length divisible by r
    for (const Partition& lambda : partitionsOf(8))
        CHECK(isCore(lambda, 3) == eHooks(lambda, 3).empty());
}

TEST_CASE("core and quotient of a worked example") {
    // β-set {16,12,9,8,4,3,2,1,0} on the 5-abacus
    const Partition lambda({8, 5, 3, 3});
    const CoreQuotient cq = coreQuotient(lambda, 5);
    CHECK(cq.core == Partition({1, 1, 1, 1}));
    CHECK(cq.quotientSize == 3);

    std::multiset<Partition> comps;
    for (const Partition& q : cq.quotient)
        if (!q.empty()) comps.insert(q);
    CHECK(comps == std::multiset<Partition>{Partition({1}), Partition({2})});

    CHECK(lambda.size() == cq.core.size() + 5 * cq.quotientSize);
}

TEST_CASE("core and quotient of a longer example") {
    const Partition mu({7, 7, 4, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
    const CoreQuotient cq = coreQuotient(mu, 5);
    CHECK(cq.core == Partition({2, 1}));
    CHECK(cq.quotientSize == 6);
    std::multiset<Partition> comps;
    for (const Partition& q : cq.quotient)
        if (!q.empty()) comps.insert(q);
    CHECK(comps == std::multiset<Partition>{Partition({2}), Partition({1, 1, 1, 1})});
}

TEST_CASE("coreQuotient of a core is trivial") {
    for (const Partition& gamma : {Partition(), Partition({1}), Partition({2, 1}), Partition({3, 1})}) {
        REQUIRE(isCore(gamma, 5));
        const CoreQuotient cq = coreQuotient(gamma, 5);
        CHECK(cq.core == gamma);
        CHECK(cq.quotientSize == 0);
        for (const Partition& q : cq.quotient) CHECK(q.empty());
    }
}

TEST_CASE("fromCoreQuotient inverts coreQuotient exhaustively") {
    for (int r : {2, 3, 5, 7})
        for (int n = 0; n <= 20; ++n)
            for (const Partition& lambda : partitionsOf(n)) {
                const CoreQuotient cq = coreQuotient(lambda, r);
                CHECK(fromCoreQuotient(cq.core, cq.quotient, r) == lambda);
                // and the convention is an exact two-sided inverse
                const CoreQuotient back = coreQuotient(lambda, r);
                CHECK(back.core == cq.core);
                CHECK(back.quotient == cq.quotient);
            }
}

TEST_CASE("fromCoreQuotient validates") {
    CHECK_THROWS_AS(fromCoreQuotient(Partition({5}), std::vector<Partition>(5), 5),
                    std::invalid_argument);  // (5) is not a 5-core
    CHECK_THROWS_AS(fromCoreQuotient(Partition(), std::vector<Partition>(4), 5),
                    std::invalid_argument);  // wrong number of components
    CHECK(fromCoreQuotient(Partition({1, 1}), std::vector<Partition>(3), 3) == Partition({1, 1}));
}

TEST_CASE("quotient invariant") {
    CHECK(nSInvariant(Partition({8, 5, 3, 3}), 5) == 2);
    CHECK(nSInvariant(Partition({7, 7, 4, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}), 5) == 4);
    CHECK(nSInvariant(Partition({2, 1}), 5) == 0);  // a 5-core
    // first row and column are bounded by |core| + s·N_s
    for (const Partition& lambda : partitionsOf(14)) {
        const CoreQuotient cq = coreQuotient(lambda, 5);
        const int ns = nSInvariant(lambda, 5);
        CHECK(lambda.first() <= cq.core.size() + 5 * ns);
        CHECK(lambda.length() <= cq.core.size() + 5 * ns);
    }
}
