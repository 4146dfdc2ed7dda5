#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "mckay/abacus.hpp"
#include "mckay/partition.hpp"

namespace mckay {

/// The partitions λ of n with p ∤ χ^λ(1), built digit by digit through cores
/// and quotients (never by filtering all of P(n)). Deterministic order.
std::vector<Partition> enumeratePPrime(int n, int p);

/// Brute-force oracle: filter all of P(n) by exact degree divisibility.
/// Intended for cross-checks at small n only.
std::vector<Partition> enumeratePPrimeBruteForce(int n, int p);

/// All λ ⊢ n with p^k-core equal to gamma; n = a·p^k + |gamma|.
struct PPrimeBlock {
    int n = 0, p = 0, k = 0, a = 0, r = 0;
    Partition gamma;
    std::vector<Partition> members;  // lexicographic in the quotient tuple
};

/// Throws std::invalid_argument if gamma is not a p^k-core of p'-degree
/// or the sizes are inconsistent.
PPrimeBlock block(int n, int p, int k, const Partition& gamma);

/// Stratification of a block by the invariant N_{p^k}(λ) = x, x in [1, a].
std::map<int, std::vector<Partition>> deltaSets(const PPrimeBlock& blk);

/// Memoized Murnaghan–Nakayama evaluation. Not thread-safe; use one cache
/// per worker (results are identical regardless of sharing).
class MnCache {
public:
    /// χ^λ on the class of cycle type `type`; requires |λ| = |type|.
    long long value(const Partition& lambda, const Partition& type);
    std::size_t entries() const { return memo_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };
    std::unordered_map<std::vector<int>, long long, KeyHash> memo_;
};

/// Convenience wrapper over a thread-local cache.
long long mnValue(const Partition& lambda, const Partition& type);

/// The x partitions of |gamma|+x with x-core gamma, indexed so that entry i
/// contains a hook of shape (x−i, 1^i). Requires gamma to be an x-core.
std::vector<Partition> addHookPartitions(const Partition& gamma, int x);

}  // namespace mckay
