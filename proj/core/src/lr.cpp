#include "mckay/lr.hpp"

#include <stdexcept>

namespace mckay {

namespace {

struct SkewCounter {
    std::vector<int> outer, inner, counts;
    std::vector<std::vector<int>> grid;  // grid[i][j] for j in [inner_i, outer_i)
    long long total = 0;

    // Fills the reading order: rows top to bottom, each row right to left.
    // Row entries weakly increase left to right, columns strictly increase,
    // and the running content stays a lattice word.
    void fill(int row, int col) {
        if (row == static_cast<int>(outer.size())) {
            ++total;
            return;
        }
        if (col < inner[row]) {
            fill(row + 1, row + 1 < static_cast<int>(outer.size()) ? outer[row + 1] - 1 : 0);
            return;
        }
        const int above = row > 0 && col < outer[row - 1] && col >= inner[row - 1]
                              ? grid[row - 1][col - inner[row - 1]]
                              : 0;
        const int right = col + 1 < outer[row] ? grid[row][col + 1 - inner[row]]
                                               : static_cast<int>(counts.size());
        for (int v = above + 1; v <= right; ++v) {
            if (counts[v - 1] == 0) continue;                                   // content = μ
            if (v > 1 && countsPlaced[v - 2] <= countsPlaced[v - 1]) continue;  // lattice
            --counts[v - 1];
            ++countsPlaced[v - 1];
            grid[row][col - inner[row]] = v;
            fill(row, col - 1);
            ++counts[v - 1];
            --countsPlaced[v - 1];
        }
    }

    std::vector<int> countsPlaced;
};

}  // namespace

long long lrCoeff(const Partition& outer, const Partition& mu, const Partition& gamma) {
    if (mu.size() + gamma.size() != outer.size())
        throw std::invalid_argument("lrCoeff: |mu| + |gamma| must equal |outer|");
    if (!outer.contains(gamma)) return 0;
    if (mu.empty()) return 1;
    if (!outer.contains(mu)) return 0;  // positivity forces μ ⊆ λ
    SkewCounter sc;
    sc.outer = outer.parts();
    sc.inner.assign(sc.outer.size(), 0);
    for (int i = 0; i < gamma.length(); ++i) sc.inner[i] = gamma.part(i);
    sc.counts = mu.parts();
    sc.countsPlaced.assign(mu.length(), 0);
    sc.grid.resize(sc.outer.size());
    for (std::size_t i = 0; i < sc.outer.size(); ++i)
        sc.grid[i].resize(sc.outer[i] - sc.inner[i]);
    sc.fill(0, sc.outer[0] - 1);
    return sc.total;
}

long long lrMulti(const Partition& outer, const std::vector<Partition>& inners) {
    int total = 0;
    for (const Partition& q : inners) total += q.size();
    if (total != outer.size())
        throw std::invalid_argument("lrMulti: inner sizes must sum to |outer|");
    if (inners.size() == 1) return outer == inners.front() ? 1 : 0;

    std::vector<Partition> head(inners.begin(), inners.end() - 1);
    const int x = inners.back().size();
    long long sum = 0;
    for (const Partition& gamma : partitionsOf(outer.size() - x)) {
        if (!outer.contains(gamma)) continue;
        const long long c = lrCoeff(outer, inners.back(), gamma);
        if (c > 0) sum += c * lrMulti(gamma, head);
    }
    return sum;
}

std::vector<RestrictionConstituent> restrictionConstituents(const Partition& lambda, int x) {
    if (x <= 0 || x >= lambda.size())
        throw std::invalid_argument("restrictionConstituents: need 0 < x < |lambda|");
    std::vector<RestrictionConstituent> out;
    for (const Partition& gamma : partitionsOf(lambda.size() - x)) {
        if (!lambda.contains(gamma)) continue;
        for (const Partition& mu : partitionsOf(x)) {
            const long long c = lrCoeff(lambda, mu, gamma);
            if (c > 0) out.push_back({mu, gamma, c});
        }
    }
    return out;
}

}  // namespace mckay
