#include "mckay/abacus.hpp"

#include <algorithm>
#include <stdexcept>

namespace mckay {

BetaSet::BetaSet(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end(), std::greater<int>());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 0) throw std::invalid_argument("beta-set elements must be nonnegative");
        if (i > 0 && elems_[i - 1] == elems_[i])
            throw std::invalid_argument("beta-set elements must be distinct");
    }
}

bool BetaSet::containsValue(int x) const {
    return std::binary_search(elems_.rbegin(), elems_.rend(), x);
}

BetaSet firstColumnBetaSet(const Partition& lambda) {
    const int ell = lambda.length();
    std::vector<int> out(ell);
    for (int i = 0; i < ell; ++i) out[i] = lambda.part(i) + ell - i - 1;
    return BetaSet(std::move(out));
}

BetaSet shift(const BetaSet& x, int s) {
    if (s < 0) throw std::invalid_argument("shift amount must be nonnegative");
    std::vector<int> out;
    out.reserve(x.count() + s);
    for (int h : x.elements()) out.push_back(h + s);
    for (int v = s - 1; v >= 0; --v) out.push_back(v);
    return BetaSet(std::move(out));
}

Partition partitionOf(const BetaSet& x) {
    const int t = x.count();
    std::vector<int> parts;
    for (int i = 0; i < t; ++i) {
        int p = x.elements()[i] - (t - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

BetaSet removeHook(const BetaSet& x, int bead, int gap) {
    if (!x.containsValue(bead) || x.containsValue(gap) || bead <= gap)
        throw std::invalid_argument("removeHook: need bead in X, gap not in X, bead > gap");
    std::vector<int> out;
    out.reserve(x.count());
    for (int h : x.elements())
        out.push_back(h == bead ? gap : h);
    return BetaSet(std::move(out));
}

Hook hookFromBetaPair(const BetaSet& x, int bead, int gap) {
    if (!x.containsValue(bead) || x.containsValue(gap) || bead <= gap)
        throw std::invalid_argument("hookFromBetaPair: not a hook pair");
    const auto& e = x.elements();
    int row = 0, leg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == bead) row = static_cast<int>(i) + 1;
        if (e[i] > gap && e[i] < bead) ++leg;
    }
    const int len = bead - gap;
    const int arm = len - leg - 1;
    const int rowPart = bead - (x.count() - row);
    return {row, rowPart - arm, arm, leg};
}

std::pair<int, int> betaPairOfNode(const Partition& lambda, int row, int col) {
    const int bead = lambda.part(row - 1) + lambda.length() - row;
    const auto hooks = hookLengths(lambda);
    return {bead, bead - hooks[row - 1][col - 1]};
}

bool isCore(const Partition& lambda, int r) {
    return eHooks(lambda, r).empty();
}

namespace {

// Ascending bead positions per runner for a β-set of size t.
std::vector<std::vector<int>> runnerPositions(const BetaSet& x, int r) {
    std::vector<std::vector<int>> runners(r);
    for (auto it = x.elements().rbegin(); it != x.elements().rend(); ++it)
        runners[*it % r].push_back(*it / r);
    return runners;
}

Partition partitionFromPositions(const std::vector<int>& ascending) {
    std::vector<int> parts;
    const int t = static_cast<int>(ascending.size());
    for (int i = t - 1; i >= 0; --i) {
        int p = ascending[i] - i;
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace

CoreQuotient coreQuotient(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("coreQuotient: r must be positive");
    const int ell = lambda.length();
    const int t = r * std::max(1, (ell + r - 1) / r);
    const BetaSet x = shift(firstColumnBetaSet(lambda), t - ell);
    const auto runners = runnerPositions(x, r);

    CoreQuotient cq;
    cq.quotient.reserve(r);
    std::vector<int> coreBeads;
    for (int j = 0; j < r; ++j) {
        cq.quotient.push_back(partitionFromPositions(runners[j]));
        cq.quotientSize += cq.quotient.back().size();
        for (int a = 0; a < static_cast<int>(runners[j].size()); ++a)
            coreBeads.push_back(r * a + j);
    }
    cq.core = partitionOf(BetaSet(std::move(coreBeads)));
    return cq;
}

Partition fromCoreQuotient(const Partition& core, const std::vector<Partition>& quotient, int r) {
    if (r < 1) throw std::invalid_argument("fromCoreQuotient: r must be positive");
    if (static_cast<int>(quotient.size()) != r)
        throw std::invalid_argument("fromCoreQuotient: quotient must have r components");
    if (!isCore(core, r)) throw std::invalid_argument("fromCoreQuotient: first argument is not an r-core");

    int maxLen = 0;
    for (const Partition& q : quotient) maxLen = std::max(maxLen, q.length());
    const int ell = core.length();
    const int t = r * (std::max(1, (ell + r - 1) / r) + maxLen);
    const BetaSet x = shift(firstColumnBetaSet(core), t - ell);
    const auto runners = runnerPositions(x, r);

    std::vector<int> beads;
    beads.reserve(t);
    for (int j = 0; j < r; ++j) {
        const int c = static_cast<int>(runners[j].size());
        // slide bead ranked i from the bottom down by the i-th part
        for (int i = 0; i < c; ++i)
            beads.push_back(r * (runners[j][c - 1 - i] + quotient[j].part(i)) + j);
    }
    return partitionOf(BetaSet(std::move(beads)));
}

int nSInvariant(const Partition& lambda, int s) {
    int best = 0;
    for (const Partition& q : coreQuotient(lambda, s).quotient)
        best = std::max({best, q.first(), q.length()});
    return best;
}

}  // namespace mckay
