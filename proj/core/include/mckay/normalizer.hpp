#pragma once

#include <compare>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "mckay/partition.hpp"

namespace mckay {

/// Irreducible character label for the normalizer of a Sylow p-subgroup of
/// S_{p^k}. `zset` records the coordinates (in [1,k]) where the underlying
/// linear chain is trivial; `twist` holds one residue mod p−1 per zset entry.
struct NormPkLabel {
    int p = 0, k = 0;
    std::vector<int> zset;   // strictly increasing subset of [1, k]
    std::vector<int> twist;  // |zset| residues in [0, p−2]

    BigInt degree() const;  // (p−1)^{k − |zset|}
    bool linear() const { return static_cast<int>(zset.size()) == k; }

    bool operator==(const NormPkLabel&) const = default;
    auto operator<=>(const NormPkLabel& o) const {
        return std::tie(zset, twist) <=> std::tie(o.zset, o.twist);
    }
};

/// All p^k labels, sorted; exactly (p−1)^k are linear and exactly one attains
/// the maximal degree (p−1)^k.
std::vector<NormPkLabel> enumNormPk(int p, int k);

/// One irreducible of the wreath product N_{p^k} ≀ S_a: distinct base labels,
/// each loaded with a nonempty partition, total size a.
struct WreathPair {
    NormPkLabel theta;
    Partition mu;
    bool operator==(const WreathPair&) const = default;
    auto operator<=>(const WreathPair& o) const {
        return std::tie(theta, mu) <=> std::tie(o.theta, o.mu);
    }
};

struct WreathAssignment {
    std::vector<WreathPair> pairs;  // sorted by label, labels distinct

    int a() const;          // Σ |mu_i|
    BigInt degree() const;  // ∏ θ_i(1)^{|μ_i|} · ∏ χ^{μ_i}(1) · a!/∏|μ_i|!

    bool operator==(const WreathAssignment&) const = default;
    auto operator<=>(const WreathAssignment& o) const { return pairs <=> o.pairs; }
};

/// All irreducible labels of N_{p^k} ≀ S_a of p'-degree; requires 1 ≤ a ≤ p−1.
/// In bijection with p^k-tuples of partitions of total size a.
std::vector<WreathAssignment> enumNormApk(int p, int k, int a);

/// One p-adic digit a·p^k of n together with its local character label.
struct NormalizerDigit {
    int k = 0, a = 0;
    WreathAssignment assign;

    bool operator==(const NormalizerDigit&) const = default;
    auto operator<=>(const NormalizerDigit& o) const {
        return std::tie(k, a, assign) <=> std::tie(o.k, o.a, o.assign);
    }
};

/// Character label of the full Sylow normalizer in S_n: one wreath label per
/// nonzero p-adic digit of n, plus an ordinary partition for the units digit.
struct NormalizerCharLabel {
    int p = 0;
    std::vector<NormalizerDigit> digits;  // descending k
    Partition tail;

    BigInt degree() const;
    nlohmann::json toJson() const;

    bool operator==(const NormalizerCharLabel&) const = default;
    auto operator<=>(const NormalizerCharLabel& o) const {
        return std::tie(digits, tail) <=> std::tie(o.digits, o.tail);
    }
};

/// All p'-degree labels of the Sylow normalizer in S_n.
std::vector<NormalizerCharLabel> enumNormN(int n, int p);

/// |enumNormN(n,p)| without materializing: per digit, the x^a coefficient of
/// the partition generating function raised to the p^k-th power.
BigInt countNormN(int n, int p);

/// Families of wreath labels used when degrees must be dominated one stratum
/// at a time. Members are built from linear base labels only.
enum class SubsetFamily {
    X0,  ///< one pair (φ, ν), ν a row or column of size a
    X,   ///< one pair (φ, ν), ν a row/column or a near-hook (a−1,1)-type shape
    Y0,  ///< (φ, ν ⊢ a−1 row/column) + (η, (1)), φ ≠ η
    Y,   ///< as Y0 but ν also allowed a near-hook (a−2,1)-type shape
    Z,   ///< (φ, ν ⊢ a−2 row/column) + two extra distinct linear singletons
    W,   ///< k=1: (φ, ν ⊢ a−2 from {(a−2),(a−3,1)} and conjugates) + two singletons
    V,   ///< k=1: (φ, ν as in W) + (η, ρ ⊢ 2), φ ≠ η
    Z4,  ///< k=1: (φ, ν ⊢ a−4 row/column) + (η, ρ ⊢ 2) + two singletons
};

/// Deduplicated, sorted member list; throws std::invalid_argument when the
/// family's parameter constraints are violated (Y,Z need a ≥ 3; W,V need
/// k = 1 and a ≥ 6; Z4 needs k = 1 and a ≥ 8; all need a ≥ 2).
std::vector<WreathAssignment> distinguishedSubset(int p, int k, int a, SubsetFamily family);

/// The degree-2 labels induced from two distinct linear base labels (a = 2);
/// binomial((p−1)^k, 2) of them.
std::vector<WreathAssignment> caseOneMSet(int p, int k);

}  // namespace mckay
