#pragma once

#include <map>
#include <vector>

#include "mckay/partition.hpp"
#include "mckay/sym_char.hpp"

namespace mckay {

/// Element of the iterated wreath product acting on p^level points:
/// (g_1,…,g_p; top) with level-(level−1) children; level 0 is trivial.
class WreathElement {
public:
    WreathElement() = default;
    static WreathElement identity(int p, int level);

    int p() const { return p_; }
    int level() const { return level_; }
    int top() const { return top_; }
    const std::vector<WreathElement>& base() const { return base_; }

    /// this ∘ rhs (rhs applied first).
    WreathElement mul(const WreathElement& rhs) const;
    /// Cycle type of the action on p^level points.
    Partition cycleType() const;

    friend std::vector<WreathElement> allWreathElements(int p, int level);

private:
    int p_ = 0, level_ = 0, top_ = 0;
    std::vector<WreathElement> base_;  // p children when level ≥ 1
};

/// The whole group, p^{(p^level − 1)/(p − 1)} elements. Intended for
/// desk-scale levels only; callers enforce a size cap.
std::vector<WreathElement> allWreathElements(int p, int level);

/// Label of a linear character of the level-k wreath product: exponent
/// coordinates s ∈ (Z_p)^k, value on g a single p-th root of unity.
struct StarLabel {
    int p = 0;
    std::vector<int> s;  // exponents, one per level

    /// All coordinates 1: the distinguished maximally twisted linear character.
    static StarLabel star(int p, int k);
};

/// Exponent e ∈ Z_p with value(s, g) = ω^e; recursive over levels:
/// the top coordinate weights the top cycle, children act through
/// cycle products. Throws std::invalid_argument on a level mismatch.
int linExponent(const StarLabel& s, const WreathElement& g);

/// Element of Z[ω], ω a primitive p-th root of unity, on the power basis
/// 1, ω, …, ω^{p−2} (the representation is unique).
struct CycloInt {
    int p = 0;
    std::vector<BigInt> c;  // length p−1

    explicit CycloInt(int p) : p(p), c(p - 1, 0) {}
    void addRootPower(int e, const BigInt& mult);  // += mult·ω^e
    void add(const CycloInt& o);
    bool isRationalInteger() const;
    const BigInt& rationalPart() const { return c[0]; }
};

/// Largest first row/column such that the box-bounded partitions of p^k are
/// still guaranteed a positive star multiplicity: p−1 at level 1,
/// p^k − p^{k−1} − p^{k−2} above.
int mStarBound(int p, int k);

/// Restriction multiplicities of symmetric-group characters of degree-p^k
/// onto the full wreath tower, computed by exact summation over the group.
/// Construction enumerates all p^{(p^k−1)/(p−1)} elements once and groups
/// them by (cycle type, exponent profile); throws std::invalid_argument if
/// the group order exceeds `cap`.
class StarRestriction {
public:
    StarRestriction(int p, int k, long long cap = 1'000'000);

    int p() const { return p_; }
    int k() const { return k_; }
    BigInt groupOrder() const { return order_; }
    std::size_t cycleTypeCount() const;

    /// [χ^λ restricted, linear character s]: exact nonnegative integer.
    /// A non-integer or negative sum throws std::logic_error — that is an
    /// implementation fault, never data.
    BigInt multiplicity(const Partition& lambda, const StarLabel& s);

private:
    int p_ = 0, k_ = 0;
    BigInt order_;
    // exponent profile c: linExponent(s,g) = Σ s_j·c_j mod p for every s
    std::map<std::pair<Partition, std::vector<int>>, long long> groups_;
    MnCache mn_;
};

struct OmegaStarReport {
    int p = 0, k = 0;
    BigInt degreeBound;                    // (p−1)^{p^{k−1}}
    int checked = 0;
    std::vector<Partition> missingFromOmega;  // in the m*-box but multiplicity 0
    std::vector<Partition> belowDegreeBound;  // positive multiplicity, small degree
    bool ok() const { return missingFromOmega.empty() && belowDegreeBound.empty(); }
};

/// For each λ in the sample: box membership must imply positive multiplicity,
/// and positive multiplicity must imply the degree lower bound.
OmegaStarReport omegaStarCheck(int p, int k, const std::vector<Partition>& sample,
                               long long cap = 1'000'000);

}  // namespace mckay
