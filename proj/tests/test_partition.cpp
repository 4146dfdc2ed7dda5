#include <doctest.h>

#include <numeric>
#include <set>

#include "mckay/partition.hpp"

using namespace mckay;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition().size() == 0);
    CHECK(Partition().empty());
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({3, 1}).length() == 2);
    CHECK(Partition({3, 1}).part(0) == 3);
    CHECK(Partition({3, 1}).part(5) == 0);  // λ_s = 0 past the end
}

TEST_CASE("conjugate") {
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (const Partition& lambda : partitionsOf(11))
        CHECK(lambda.conjugate().conjugate() == lambda);
}

TEST_CASE("containment and box membership") {
    CHECK(Partition({4, 2, 1}).contains(Partition({2, 2})));
    CHECK_FALSE(Partition({4, 2, 1}).contains(Partition({2, 2, 2})));
    CHECK(Partition({4, 2, 1}).contains(Partition()));
    CHECK(inBox(Partition({3, 3, 3}), 3));
    CHECK_FALSE(inBox(Partition({4, 1}), 3));
    CHECK_FALSE(inBox(Partition({2, 1, 1, 1}), 3));
    for (const Partition& lambda : partitionsOf(9))
        CHECK(inBox(lambda, 5) == inBox(lambda.conjugate(), 5));
}

TEST_CASE("plus and disjointUnion") {
    CHECK(plus(Partition({3, 1}), Partition({2, 2, 1})) == Partition({5, 3, 1}));
    CHECK(plus(Partition(), Partition({2})) == Partition({2}));
    CHECK(disjointUnion(Partition({3, 1}), Partition({2, 2})) == Partition({3, 2, 2, 1}));
    // conjugation swaps the two operations
    for (const Partition& a : partitionsOf(5))
        for (const Partition& b : partitionsOf(4))
            CHECK(plus(a, b).conjugate() == disjointUnion(a.conjugate(), b.conjugate()));
}

TEST_CASE("hook lengths") {
    // classical example (4,2,1): hooks 6,4,2,1 / 3,1 / 1
    const auto h = hookLengths(Partition({4, 2, 1}));
    CHECK(h == std::vector<std::vector<int>>{{6, 4, 2, 1}, {3, 1}, {1}});

    const auto hooks2 = eHooks(Partition({4, 2, 1}), 2);
    std::multiset<int> lens;
    for (const Hook& hk : hooks2) lens.insert(hk.length());
    CHECK(lens == std::multiset<int>{2, 4, 6});
}

TEST_CASE("degree by the hook length formula") {
    CHECK(degree(Partition()) == 1);
    CHECK(degree(Partition({5})) == 1);
    CHECK(degree(Partition({1, 1, 1})) == 1);
    CHECK(degree(Partition({2, 1})) == 2);
    CHECK(degree(Partition({4, 2, 1})) == 35);
    CHECK(degree(Partition({5, 4, 3, 2, 1})) == 292864);
    for (const Partition& lambda : partitionsOf(10))
        CHECK(degree(lambda) == degree(lambda.conjugate()));
}

TEST_CASE("sum of squared degrees is n!") {
    for (int n = 1; n <= 14; ++n) {
        BigInt total = 0;
        for (const Partition& lambda : partitionsOf(n)) {
            const BigInt d = degree(lambda);
            total += d * d;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("partitionsOf") {
    CHECK(partitionsOf(0).size() == 1);
    CHECK(partitionsOf(5).size() == 7);
    CHECK(partitionsOf(10).size() == 42);
    CHECK(partitionsOf(20).size() == 627);
    // all distinct, all of the right size
    const auto ps = partitionsOf(9);
    std::set<Partition> uniq(ps.begin(), ps.end());
    CHECK(uniq.size() == ps.size());
    for (const Partition& lambda : ps) CHECK(lambda.size() == 9);
}

TEST_CASE("partition tuples: enumeration count matches placement count") {
    for (int slots : {1, 2, 3, 5}) {
        for (int total = 0; total <= 6; ++total) {
            long seen = 0;
            forEachPartitionTuple(slots, total, [&](const std::vector<Partition>& tup) {
                ++seen;
                int sum = 0;
                for (const Partition& q : tup) sum += q.size();
                CHECK(sum == total);
                CHECK(tup.size() == static_cast<std::size_t>(slots));
            });
            CHECK(countPartitionTuples(slots, total) == seen);
        }
    }
    // [x^3] of the partition generating function to the 5th power
    CHECK(countPartitionTuples(5, 3) == 65);
}
