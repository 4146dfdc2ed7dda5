#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mckay/partition.hpp"

namespace mckay {

struct CheckResult {
    std::string checkId;
    nlohmann::json params;
    enum class Status { pass, fail, skipped } status = Status::skipped;
    nlohmann::json witness;  // populated on failure
    double elapsedSeconds = 0;

    bool passed() const { return status == Status::pass; }
    nlohmann::json toJson() const;
};

/// Minimal-degree facts over P(n), exhaustively for n in [nLo, nHi] ⊆ [5,40]:
/// nonlinear degrees are ≥ n−1; inside the (n−2)-box (n ≥ 9) the minimum is
/// exactly n(n−3)/2; inside the (n−3)-box (n ≥ 15) it is n(n−1)(n−5)/6.
CheckResult checkMinDegrees(int nLo, int nHi);

/// Three inequalities evaluated exactly on integer grids (primes ≤ 97,
/// k ∈ [2,12]), including the single expected failure point of the third one
/// at (p,k) = (5,2).
CheckResult checkGridInequalities();

/// |enumeratePPrime(n,p)| equals the label count of the Sylow normalizer,
/// computed through an independent generating-function route; for n ≤ 20
/// also equals the brute-force degree filter.
CheckResult checkCounting(int n, int p);

/// Sizes of the strata Δ_x, x ∈ {a, a−1, a−2}, against their closed forms
/// 2p^k, 2p^{2k}−p^k / 2p^{2k}, p^{3k}+3p^{2k}. Level 1 is checked by full
/// member enumeration (and cross-checked combinatorially); level 2 by
/// placement counting over quotient multisets only.
CheckResult checkStrataSizes(int p, int k, int a, const Partition& gamma);

/// Cardinalities and degree facts of the distinguished wreath-label families
/// against their closed forms.
CheckResult checkFamilySizes(int p, int k, int a);

/// Exhaustive max degree over the level-(k,a) wreath labels equals
/// (p−1)^{ak}·d with d the hook-length max over Irr(S_a).
CheckResult checkMaxDegree(int p, int k, int a);

/// The x partitions obtained by adding an x-hook to the x-core gamma each
/// restrict with a hook constituent of the matching leg.
CheckResult checkHookAddition(const Partition& gamma, int x);

/// Box-bound inclusion into the support of the maximally twisted linear
/// character. k=1: full P(p); k=2: `sampleSize` seeded draws from the
/// m*-box of P(p^k).
CheckResult checkStarInclusion(int p, int k, int sampleSize, std::uint64_t seed,
                               long long cap = 1'000'000);

/// Degree lower bounds over the star-support: (p−1)^{p^{k−1}} always, and
/// (p−1)^{ak}·a!·(p−1)! for k ≥ 2 (single-digit case a = 1 only; larger a is
/// reported as skipped). At k = 1 the minimum is pinned to exactly p−1.
CheckResult checkStarDegreeBounds(int p, int k, int a, long long cap = 1'000'000);

/// The full suite, fanned out over std::async; the seed is recorded in the
/// sampled checks' params. Results ordered by checkId, then params.
std::vector<CheckResult> runAll(std::uint64_t seed);

}  // namespace mckay
