#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mckay {

using BigInt = mpz_class;

/// Weakly decreasing sequence of positive integer parts.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }
    /// 0-based; returns 0 past the end (the usual λ_s = 0 convention).
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    /// Young diagram containment: inner_i <= this_i for all i.
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

/// Componentwise sum, padding the shorter with zeros.
Partition plus(const Partition& a, const Partition& b);
/// Merge the parts of both and re-sort.
Partition disjointUnion(const Partition& a, const Partition& b);
/// λ fits in a t x t box: λ_1 <= t and ℓ(λ) <= t.
bool inBox(const Partition& lambda, int t);

/// Hook of the node (row, col), 1-based coordinates.
struct Hook {
    int row = 0;
    int col = 0;
    int arm = 0;
    int leg = 0;
    int length() const { return arm + leg + 1; }
};

/// hookLengths(λ)[i][j] = |h_{i+1,j+1}(λ)|.
std::vector<std::vector<int>> hookLengths(const Partition& lambda);
/// All hooks whose length is divisible by e, row-major order.
std::vector<Hook> eHooks(const Partition& lambda, int e);

/// χ^λ(1) by the hook length formula, exact.
BigInt degree(const Partition& lambda);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// All partitions of n, ascending lexicographic order.
std::vector<Partition> partitionsOf(int n);

/// Visits every `slots`-tuple of partitions with total size `total`.
void forEachPartitionTuple(int slots, int total,
                           const std::function<void(const std::vector<Partition>&)>& visit);
/// Number of such tuples, counted by multiset placement (no enumeration of slots).
BigInt countPartitionTuples(int slots, int total);

}  // namespace mckay
