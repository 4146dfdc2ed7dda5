#pragma once

#include <vector>

#include "mckay/partition.hpp"

namespace mckay {

/// Littlewood–Richardson coefficient c^λ_{μγ}: the multiplicity of χ^μ × χ^γ
/// in the restriction of χ^λ to S_{|μ|} × S_{|γ|}. Counted by enumerating
/// lattice-word skew tableaux of shape λ/γ and content μ.
/// Throws std::invalid_argument unless |μ| + |γ| = |λ|.
long long lrCoeff(const Partition& outer, const Partition& mu, const Partition& gamma);

/// Multiplicity of χ^{μ_1} × ... × χ^{μ_t} in the restriction of χ^outer to the
/// Young subgroup S_{|μ_1|} × ... × S_{|μ_t|}; iterated two-factor expansion.
long long lrMulti(const Partition& outer, const std::vector<Partition>& inners);

struct RestrictionConstituent {
    Partition mu;     // ⊢ x
    Partition gamma;  // ⊢ |λ| − x
    long long coeff = 0;
};

/// All constituents of χ^λ restricted to S_x × S_{|λ|−x}, positive
/// multiplicities only. Requires 0 < x < |λ|.
std::vector<RestrictionConstituent> restrictionConstituents(const Partition& lambda, int x);

}  // namespace mckay
