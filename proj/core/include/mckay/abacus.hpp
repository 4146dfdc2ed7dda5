#pragma once

#include <utility>
#include <vector>

#include "mckay/partition.hpp"

namespace mckay {

/// Finite set of distinct nonnegative integers, stored in decreasing order.
/// Encodes a partition on the James abacus; shifting never changes P(X).
class BetaSet {
public:
    BetaSet() = default;
    /// Throws std::invalid_argument on negatives or repeated elements.
    explicit BetaSet(std::vector<int> elements);

    const std::vector<int>& elements() const { return elems_; }
    int count() const { return static_cast<int>(elems_.size()); }
    bool containsValue(int x) const;

    bool operator==(const BetaSet&) const = default;

private:
    std::vector<int> elems_;  // strictly decreasing
};

/// X_λ = first-column hook lengths {λ_i + ℓ(λ) − i}.
BetaSet firstColumnBetaSet(const Partition& lambda);
/// X^{+s}: every element raised by s, plus the new beads s−1,…,0.
BetaSet shift(const BetaSet& x, int s);
/// P(X): parts h_i − (t − i) for the sorted elements.
Partition partitionOf(const BetaSet& x);

/// Removes the hook H(x,y): requires x ∈ X, y ∉ X, x > y.
/// Throws std::invalid_argument if the precondition fails.
BetaSet removeHook(const BetaSet& x, int bead, int gap);

/// Node coordinates of the hook H(bead, gap) read off the β-set.
Hook hookFromBetaPair(const BetaSet& x, int bead, int gap);
/// The (bead, gap) pair of the node (row, col) on the first-column β-set of λ.
std::pair<int, int> betaPairOfNode(const Partition& lambda, int row, int col);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // r components, fixed runner convention
    int quotientSize = 0;
};

/// True iff λ has no r-hook.
bool isCore(const Partition& lambda, int r);

/// Core and quotient of λ on the r-abacus. The quotient component order is
/// fixed by the β-set of smallest positive size that is a multiple of r and
/// at least ℓ(λ), which makes fromCoreQuotient an exact inverse.
CoreQuotient coreQuotient(const Partition& lambda, int r);

/// Inverse of coreQuotient. Throws std::invalid_argument unless `core` is an
/// r-core and `quotient` has exactly r components.
Partition fromCoreQuotient(const Partition& core, const std::vector<Partition>& quotient, int r);

/// Max over the s-quotient components of first part and length.
int nSInvariant(const Partition& lambda, int s);

}  // namespace mckay
