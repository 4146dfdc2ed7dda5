#include "mckay/sym_char.hpp"

#include <algorithm>
#include <stdexcept>

namespace mckay {

namespace {

long long intPow(int b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::vector<Partition> enumeratePPrime(int n, int p) {
    if (n < 0) throw std::invalid_argument("enumeratePPrime: n must be nonnegative");
    if (p < 2) throw std::invalid_argument("enumeratePPrime: p must be a prime");
    if (n < p) return partitionsOf(n);
    int pk = p;
    while (static_cast<long long>(pk) * p <= n) pk *= p;
    const int a = n / pk;
    const int r = n % pk;
    std::vector<Partition> out;
    for (const Partition& gamma : enumeratePPrime(r, p))
        forEachPartitionTuple(pk, a, [&](const std::vector<Partition>& tuple) {
            out.push_back(fromCoreQuotient(gamma, tuple, pk));
        });
    return out;
}

std::vector<Partition> enumeratePPrimeBruteForce(int n, int p) {
    std::vector<Partition> out;
    for (const Partition& lambda : partitionsOf(n))
        if (degree(lambda) % p != 0) out.push_back(lambda);
    return out;
}

PPrimeBlock block(int n, int p, int k, const Partition& gamma) {
    PPrimeBlock blk;
    blk.n = n;
    blk.p = p;
    blk.k = k;
    blk.r = gamma.size();
    const long long pk = intPow(p, k);
    if (blk.r >= pk || (n - blk.r) % pk != 0)
        throw std::invalid_argument("block: need n = a*p^k + |gamma| with |gamma| < p^k");
    blk.a = static_cast<int>((n - blk.r) / pk);
    if (blk.a < 1 || blk.a > p - 1)
        throw std::invalid_argument("block: quotient size must lie in [1, p-1]");
    if (!isCore(gamma, static_cast<int>(pk)))
        throw std::invalid_argument("block: gamma is not a p^k-core");
    if (degree(gamma) % p == 0)
        throw std::invalid_argument("block: gamma must have p'-degree");
    blk.gamma = gamma;
    forEachPartitionTuple(static_cast<int>(pk), blk.a, [&](const std::vector<Partition>& tuple) {
        blk.members.push_back(fromCoreQuotient(gamma, tuple, static_cast<int>(pk)));
    });
    return blk;
}

std::map<int, std::vector<Partition>> deltaSets(const PPrimeBlock& blk) {
    const int pk = static_cast<int>(intPow(blk.p, blk.k));
    std::map<int, std::vector<Partition>> out;
    for (const Partition& lambda : blk.members)
        out[nSInvariant(lambda, pk)].push_back(lambda);
    return out;
}

std::size_t MnCache::KeyHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x + 1);
        h *= 1099511628211ull;
    }
    return h;
}

long long MnCache::value(const Partition& lambda, const Partition& type) {
    if (lambda.size() != type.size())
        throw std::invalid_argument("mnValue: |lambda| must equal |type|");
    if (lambda.empty()) return 1;

    std::vector<int> key = lambda.parts();
    key.push_back(-1);
    key.insert(key.end(), type.parts().begin(), type.parts().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int cyc = type.parts().front();
    const Partition rest(std::vector<int>(type.parts().begin() + 1, type.parts().end()));
    const BetaSet x = firstColumnBetaSet(lambda);

    long long sum = 0;
    for (int bead : x.elements()) {
        const int gap = bead - cyc;
        if (gap < 0 || x.containsValue(gap)) continue;
        int leg = 0;
        for (int z : x.elements())
            if (z > gap && z < bead) ++leg;
        const long long sub = value(partitionOf(removeHook(x, bead, gap)), rest);
        sum += (leg % 2 ? -sub : sub);
    }
    memo_.emplace(std::move(key), sum);
    return sum;
}

long long mnValue(const Partition& lambda, const Partition& type) {
    thread_local MnCache cache;
    return cache.value(lambda, type);
}

std::vector<Partition> addHookPartitions(const Partition& gamma, int x) {
    if (x < 1) throw std::invalid_argument("addHookPartitions: x must be positive");
    if (!isCore(gamma, x)) throw std::invalid_argument("addHookPartitions: gamma has an x-hook");

    std::vector<Partition> out(x);
    std::vector<bool> seen(x, false);
    for (int j = 0; j < x; ++j) {
        std::vector<Partition> quotient(x);
        quotient[j] = Partition({1});
        const Partition lam = fromCoreQuotient(gamma, quotient, x);
        const auto hooks = eHooks(lam, x);
        if (hooks.size() != 1)
            throw std::logic_error("addHookPartitions: expected a unique x-hook");
        const int i = hooks.front().leg;
        if (seen[i]) throw std::logic_error("addHookPartitions: duplicate hook type");
        seen[i] = true;
        out[i] = lam;
    }
    return out;
}

}  // namespace mckay
