#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mckay/bijection.hpp"
#include "mckay/sym_char.hpp"

using namespace mckay;

TEST_CASE("dominance matching by sorted comparison") {
    using V = std::vector<BigInt>;
    CHECK(dominanceMatch(V{6, 4, 4, 1, 1}, V{4, 1, 1, 1, 1}).feasible);
    CHECK_FALSE(dominanceMatch(V{3, 3, 3}, V{4, 1, 1}).feasible);
    CHECK(dominanceMatch(V{}, V{}).feasible);
    CHECK_THROWS_AS(dominanceMatch(V{1}, V{1, 1}), std::invalid_argument);

    const auto m = dominanceMatch(V{5, 2, 9}, V{2, 2, 2});
    REQUIRE(m.feasible);
    CHECK(m.pairs.size() == 3);
    // every pair dominates
    const V glob{5, 2, 9}, loc{2, 2, 2};
    for (const auto& [g, l] : m.pairs) CHECK(loc[l] <= glob[g]);
}

TEST_CASE("sorted-comparison feasibility equals maximum matching, randomized") {
    std::mt19937_64 rng(20260824);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<BigInt> glob, loc;
        for (int i = 0; i < n; ++i) glob.push_back(static_cast<long>(rng() % 30));
        for (int i = 0; i < n; ++i) loc.push_back(static_cast<long>(rng() % 30));

        std::vector<std::vector<int>> adj(n);
        for (int l = 0; l < n; ++l)
            for (int g = 0; g < n; ++g)
                if (loc[l] <= glob[g]) adj[l].push_back(g);

        const bool viaSort = dominanceMatch(glob, loc).feasible;
        const bool viaMatching = maxBipartiteMatching(adj, n) == n;
        CHECK(viaSort == viaMatching);
    }
}

TEST_CASE("relation feasibility: dominance vs divisibility at n=7, p=3") {
    CHECK(relationMatchExists(7, 3, DegreeRelation::dominance));
    CHECK_FALSE(relationMatchExists(7, 3, DegreeRelation::divisibility));
}

TEST_CASE("bijection at n = p = 5") {
    const auto rec = buildBijection(5, 5, Strategy::recursive);
    CHECK(verifyBijection(rec).pass);
    CHECK_FALSE(rec.anomaly);
    std::multiset<int> dS, dN;
    for (const auto& pr : rec.pairs) {
        dS.insert(static_cast<int>(pr.dS.get_si()));
        dN.insert(static_cast<int>(pr.dN.get_si()));
    }
    CHECK(dS == std::multiset<int>{1, 1, 4, 4, 6});
    CHECK(dN == std::multiset<int>{1, 1, 1, 1, 4});
}

TEST_CASE("identity regime below p") {
    const auto rec = buildBijection(4, 5, Strategy::recursive);
    CHECK(verifyBijection(rec).pass);
    CHECK(rec.pairs.size() == 5);  // all of P(4)
    for (const auto& pr : rec.pairs) {
        CHECK(pr.label.digits.empty());
        CHECK(pr.label.tail == pr.lambda);
        CHECK(pr.dN == pr.dS);
    }
}

TEST_CASE("bijections verify across strategies and primes") {
    for (int p : {2, 3, 5, 7})
        for (int n = 1; n <= 16; ++n)
            for (auto strat : {Strategy::recursive, Strategy::global}) {
                const auto rec = buildBijection(n, p, strat);
                const auto rep = verifyBijection(rec);
                INFO("n=" << n << " p=" << p << " strategy="
                          << (strat == Strategy::global ? "global" : "recursive")
                          << " msg=" << rep.message);
                CHECK(rep.pass);
                CHECK_FALSE(rec.anomaly);
            }
}

TEST_CASE("extremal partitions receive minimal-degree labels") {
    // in each recursive block the row extension γ + (a·p^k) and the column
    // extension γ ∪ (1^{a·p^k}) sit at locally minimal normalizer degree
    const auto rec = buildBijection(12, 5, Strategy::recursive);
    REQUIRE(verifyBijection(rec).pass);
    for (const auto& blk : rec.blockTrace) CHECK_FALSE(blk.fellBack);

    std::map<Partition, BigInt> dN;
    for (const auto& pr : rec.pairs) dN[pr.lambda] = pr.dN;
    for (const Partition& gamma : enumeratePPrime(2, 5)) {
        std::vector<int> col(10, 1);
        const Partition rowExt = plus(gamma, Partition({10}));
        const Partition colExt = disjointUnion(gamma, Partition(col));
        CHECK(dN.at(rowExt) == 1);
        CHECK(dN.at(colExt) == 1);
    }
}

TEST_CASE("negative control: a corrupted record fails verification") {
    auto rec = buildBijection(10, 5, Strategy::recursive);
    REQUIRE(verifyBijection(rec).pass);

    SUBCASE("wrong degree") {
        rec.pairs[0].dS += 1;
        CHECK_FALSE(verifyBijection(rec).pass);
    }
    SUBCASE("duplicate label") {
        rec.pairs[0].label = rec.pairs[1].label;
        CHECK_FALSE(verifyBijection(rec).pass);
    }
    SUBCASE("dropped pair") {
        rec.pairs.pop_back();
        CHECK_FALSE(verifyBijection(rec).pass);
    }
    SUBCASE("swapped degrees breaking dominance") {
        // find a pair with dN < dS and inflate dN past dS
        for (auto& pr : rec.pairs)
            if (pr.dN < pr.dS) {
                pr.dN = pr.dS + 1;
                break;
            }
        CHECK_FALSE(verifyBijection(rec).pass);
    }
}

TEST_CASE("pair JSON schema") {
    const auto rec = buildBijection(6, 5, Strategy::recursive);
    for (const auto& pr : rec.pairs) {
        const auto j = pairToJson(pr);
        CHECK(j["lambda"].is_array());
        CHECK(j["label"].is_object());
        CHECK(j["dS"].is_string());
        CHECK(j["dN"].is_string());
        CHECK(j["dS"].get<std::string>() == pr.dS.get_str());
    }
}

TEST_CASE("dominance holds pair by pair up to n = 24, p = 5") {
    for (int n : {20, 24}) {
        const auto rec = buildBijection(n, 5, Strategy::recursive);
        REQUIRE(verifyBijection(rec).pass);
        for (const auto& pr : rec.pairs) CHECK(pr.dN <= pr.dS);
    }
}
