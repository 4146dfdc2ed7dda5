#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mckay/normalizer.hpp"
#include "mckay/partition.hpp"

namespace mckay {

enum class DegreeRelation { dominance, divisibility };
enum class Strategy { recursive, global };

struct DominanceMatching {
    bool feasible = false;
    /// (global index, local index) pairs; empty when infeasible.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// first sorted position where local exceeds global, valid when infeasible
    std::size_t failPosition = 0;
};

/// Pairs the two multisets by descending sort; feasible iff every sorted
/// local value is ≤ its global partner. Throws std::invalid_argument on a
/// size mismatch.
DominanceMatching dominanceMatch(const std::vector<BigInt>& global,
                                 const std::vector<BigInt>& local);

/// Kuhn's augmenting-path maximum matching; adj[l] lists right neighbours of
/// left vertex l. Returns the matching size.
int maxBipartiteMatching(const std::vector<std::vector<int>>& adj, int nRight);

/// Whether some bijection between the p'-degrees of S_n and of the Sylow
/// normalizer respects the relation (local ≤ global, or local | global).
bool relationMatchExists(int n, int p, DegreeRelation rel);

struct BijectionPair {
    Partition lambda;
    NormalizerCharLabel label;
    BigInt dS, dN;
};

struct BlockTrace {
    Partition gamma;
    int k = 0, a = 0;
    std::size_t size = 0;
    bool fellBack = false;
};

struct BijectionRecord {
    int n = 0, p = 0;
    Strategy strategy = Strategy::recursive;
    std::vector<BijectionPair> pairs;
    std::vector<BlockTrace> blockTrace;  // recursive strategy only
    bool anomaly = false;  // a block match was infeasible; global fallback used
};

/// Degree-dominating bijection between the p'-degree characters of S_n and
/// of its Sylow p-normalizer. `recursive` recurses on the largest p-adic
/// digit and matches block by block, sending the two extremal partitions of
/// each block to minimal-degree labels; `global` sorts both full degree
/// multisets once.
BijectionRecord buildBijection(int n, int p, Strategy strategy);

struct BijectionReport {
    bool pass = false;
    std::string message;  // witness description on failure
};

/// Re-checks bijectivity, per-pair degree correctness and dominance.
BijectionReport verifyBijection(const BijectionRecord& rec);

/// {"lambda":[...], "label":{...}, "dS":"...", "dN":"..."} with degrees as
/// decimal strings.
nlohmann::json pairToJson(const BijectionPair& pr);

}  // namespace mckay
