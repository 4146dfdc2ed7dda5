#include <doctest.h>

#include <map>

#include "mckay/lr.hpp"
#include "mckay/sym_char.hpp"

using namespace mckay;

TEST_CASE("small Littlewood–Richardson coefficients") {
    CHECK(lrCoeff(Partition({4, 1}), Partition({4}), Partition({1})) == 1);
    CHECK(lrCoeff(Partition({2, 2}), Partition({2, 1}), Partition({1})) == 1);
    CHECK(lrCoeff(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lrCoeff(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
    CHECK(lrCoeff(Partition({4, 2}), Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(lrCoeff(Partition({2, 2, 2}), Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(lrCoeff(Partition({5, 1}), Partition({2, 1}), Partition({2, 1})) == 0);
    // inner not contained
    CHECK(lrCoeff(Partition({3, 3}), Partition({2}), Partition({4})) == 0);
    CHECK(lrCoeff(Partition({3, 3}), Partition({3, 2, 1}), Partition()) == 0);
    // empty factors
    CHECK(lrCoeff(Partition({3, 1}), Partition(), Partition({3, 1})) == 1);
    CHECK(lrCoeff(Partition({3, 1}), Partition({3, 1}), Partition()) == 1);
    CHECK_THROWS_AS(lrCoeff(Partition({3, 1}), Partition({1}), Partition({1})),
                    std::invalid_argument);
}

TEST_CASE("symmetry in the two inner factors") {
    for (int n = 2; n <= 10; ++n)
        for (const Partition& outer : partitionsOf(n))
            for (int x = 1; x < n; ++x)
                for (const Partition& mu : partitionsOf(x))
                    for (const Partition& gamma : partitionsOf(n - x))
                        CHECK(lrCoeff(outer, mu, gamma) == lrCoeff(outer, gamma, mu));
}

TEST_CASE("conjugation symmetry") {
    for (const Partition& outer : partitionsOf(8))
        for (const Partition& mu : partitionsOf(3))
            for (const Partition& gamma : partitionsOf(5))
                CHECK(lrCoeff(outer, mu, gamma) ==
                      lrCoeff(outer.conjugate(), mu.conjugate(), gamma.conjugate()));
}

TEST_CASE("restriction preserves degree") {
    // deg λ = Σ_{μ,γ} c^λ_{μγ}·deg(μ)·deg(γ)
    for (int n = 2; n <= 12; ++n)
        for (int x = 1; x < n; ++x)
            for (const Partition& outer : partitionsOf(n)) {
                BigInt sum = 0;
                for (const auto& c : restrictionConstituents(outer, x))
                    sum += BigInt(static_cast<long>(c.coeff)) * degree(c.mu) * degree(c.gamma);
                CHECK(sum == degree(outer));
            }
}

TEST_CASE("constituents agree with MN inner products, n = 7") {
    // multiplicity of χ^μ × χ^γ in the restriction, via characters of the
    // Young subgroup S_x × S_{n-x}
    const int n = 7, x = 3;
    for (const Partition& outer : partitionsOf(n)) {
        std::map<std::pair<Partition, Partition>, long long> viaLr;
        for (const auto& c : restrictionConstituents(outer, x)) viaLr[{c.mu, c.gamma}] = c.coeff;
        for (const Partition& mu : partitionsOf(x))
            for (const Partition& gamma : partitionsOf(n - x)) {
                // ⟨Res χ^outer, χ^μ × χ^γ⟩ summed over pairs of classes
                BigInt inner = 0;
                for (const Partition& t1 : partitionsOf(x))
                    for (const Partition& t2 : partitionsOf(n - x)) {
                        BigInt cs1 = factorial(x), cs2 = factorial(n - x);
                        std::vector<int> m1(x + 1, 0), m2(n - x + 1, 0);
                        for (int part : t1.parts()) { cs1 /= part; ++m1[part]; }
                        for (int part : t2.parts()) { cs2 /= part; ++m2[part]; }
                        for (int m = 1; m <= x; ++m) cs1 /= factorial(m1[m]);
                        for (int m = 1; m <= n - x; ++m) cs2 /= factorial(m2[m]);
                        inner += cs1 * cs2 *
                                 static_cast<long>(mnValue(outer, disjointUnion(t1, t2))) *
                                 static_cast<long>(mnValue(mu, t1)) *
                                 static_cast<long>(mnValue(gamma, t2));
                    }
                CHECK(inner == factorial(x) * factorial(n - x) *
                                   BigInt(static_cast<long>(viaLr.count({mu, gamma})
                                                                ? viaLr[{mu, gamma}]
                                                                : 0)));
            }
    }
}

TEST_CASE("lrMulti") {
    // iterated restriction to three factors
    CHECK(lrMulti(Partition({2, 1}), {Partition({1}), Partition({1}), Partition({1})}) == 2);
    CHECK(lrMulti(Partition({3}), {Partition({1}), Partition({1}), Partition({1})}) == 1);
    CHECK(lrMulti(Partition({4, 2}), {Partition({2}), Partition({2, 1}), Partition({1})}) ==
          lrMulti(Partition({4, 2}), {Partition({2, 1}), Partition({2}), Partition({1})}));
    // two factors reduces to lrCoeff
    for (const Partition& outer : partitionsOf(7))
        for (const Partition& mu : partitionsOf(3))
            for (const Partition& gamma : partitionsOf(4))
                CHECK(lrMulti(outer, {mu, gamma}) == lrCoeff(outer, mu, gamma));
}

TEST_CASE("hook constituents after adding a hook, exhaustive to size 14") {
    // whenever λ is γ plus one x-hook of leg ℓ, the restriction of χ^λ to
    // S_x × S_{|γ|} contains χ^{(x-ℓ,1^ℓ)} × χ^γ
    for (int total = 2; total <= 14; ++total)
        for (int x = 2; x < total; ++x)
            for (const Partition& gamma : partitionsOf(total - x)) {
                if (!isCore(gamma, x)) continue;
                for (const Partition& lambda : addHookPartitions(gamma, x)) {
                    const auto hooks = eHooks(lambda, x);
                    REQUIRE(hooks.size() == 1);
                    const int leg = hooks[0].leg;
                    std::vector<int> hookShape{x - leg};
                    for (int i = 0; i < leg; ++i) hookShape.push_back(1);
                    CHECK(lrCoeff(lambda, Partition(hookShape), gamma) > 0);
                }
            }
}
