#include "mckay/bijection.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mckay/abacus.hpp"
#include "mckay/sym_char.hpp"

namespace mckay {

DominanceMatching dominanceMatch(const std::vector<BigInt>& global,
                                 const std::vector<BigInt>& local) {
    if (global.size() != local.size())
        throw std::invalid_argument("dominanceMatch: multisets must have equal size");
    std::vector<std::size_t> ig(global.size()), il(local.size());
    for (std::size_t i = 0; i < global.size(); ++i) ig[i] = il[i] = i;
    std::sort(ig.begin(), ig.end(),
              [&](std::size_t a, std::size_t b) { return global[a] > global[b]; });
    std::sort(il.begin(), il.end(),
              [&](std::size_t a, std::size_t b) { return local[a] > local[b]; });

    DominanceMatching m;
    for (std::size_t i = 0; i < ig.size(); ++i)
        if (local[il[i]] > global[ig[i]]) {
            m.failPosition = i;
            return m;
        }
    m.feasible = true;
    for (std::size_t i = 0; i < ig.size(); ++i) m.pairs.emplace_back(ig[i], il[i]);
    return m;
}

int maxBipartiteMatching(const std::vector<std::vector<int>>& adj, int nRight) {
    std::vector<int> matchR(nRight, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int l, std::vector<char>& seen) {
        for (int r : adj[l]) {
            if (seen[r]) continue;
            seen[r] = 1;
            if (matchR[r] < 0 || augment(matchR[r], seen)) {
                matchR[r] = l;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (std::size_t l = 0; l < adj.size(); ++l) {
        std::vector<char> seen(nRight, 0);
        if (augment(static_cast<int>(l), seen)) ++size;
    }
    return size;
}

bool relationMatchExists(int n, int p, DegreeRelation rel) {
    std::vector<BigInt> global;
    for (const Partition& lambda : enumeratePPrime(n, p)) global.push_back(degree(lambda));
    std::vector<BigInt> local;
    for (const NormalizerCharLabel& l : enumNormN(n, p)) local.push_back(l.degree());
    if (global.size() != local.size()) return false;

    const auto compatible = [rel](const BigInt& loc, const BigInt& glob) {
        return rel == DegreeRelation::dominance ? loc <= glob : glob % loc == 0;
    };
    std::vector<std::vector<int>> adj(global.size());
    for (std::size_t g = 0; g < global.size(); ++g)
        for (std::size_t l = 0; l < local.size(); ++l)
            if (compatible(local[l], global[g])) adj[g].push_back(static_cast<int>(l));
    return maxBipartiteMatching(adj, static_cast<int>(local.size())) ==
           static_cast<int>(global.size());
}

namespace {

struct LocalEntry {
    NormalizerCharLabel label;
    BigInt deg;
};

struct GlobalEntry {
    Partition lambda;
    BigInt deg;
};

void sortGlobalsDesc(std::vector<GlobalEntry>& v) {
    std::sort(v.begin(), v.end(), [](const GlobalEntry& a, const GlobalEntry& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.lambda < b.lambda;
    });
}

void sortLocalsDesc(std::vector<LocalEntry>& v) {
    std::sort(v.begin(), v.end(), [](const LocalEntry& a, const LocalEntry& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.label < b.label;
    });
}

BijectionRecord buildIdentity(int n, int p, Strategy strategy) {
    BijectionRecord rec{n, p, strategy};
    for (const Partition& lambda : partitionsOf(n)) {
        const BigInt d = degree(lambda);
        rec.pairs.push_back({lambda, {p, {}, lambda}, d, d});
    }
    return rec;
}

BijectionRecord buildGlobal(int n, int p) {
    BijectionRecord rec{n, p, Strategy::global};
    std::vector<GlobalEntry> globals;
    for (const Partition& lambda : enumeratePPrime(n, p)) globals.push_back({lambda, degree(lambda)});
    std::vector<LocalEntry> locals;
    for (const NormalizerCharLabel& l : enumNormN(n, p)) locals.push_back({l, l.degree()});
    sortGlobalsDesc(globals);
    sortLocalsDesc(locals);
    for (std::size_t i = 0; i < globals.size(); ++i) {
        if (locals[i].deg > globals[i].deg) rec.anomaly = true;
        rec.pairs.push_back({globals[i].lambda, locals[i].label, globals[i].deg, locals[i].deg});
    }
    return rec;
}

long long intPow(int b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

BijectionRecord buildBijection(int n, int p, Strategy strategy) {
    if (n < 0 || p < 2) throw std::invalid_argument("buildBijection: need n >= 0, prime p");
    if (n < p) return buildIdentity(n, p, strategy);
    if (strategy == Strategy::global) return buildGlobal(n, p);

    int k = 1;
    while (intPow(p, k + 1) <= n) ++k;
    const int apk = static_cast<int>(intPow(p, k));
    const int a = n / apk;
    const int r = n % apk;

    const BijectionRecord sub = buildBijection(r, p, Strategy::recursive);
    if (sub.anomaly) return buildGlobal(n, p);

    std::vector<std::pair<WreathAssignment, BigInt>> wreath;
    for (const WreathAssignment& w : enumNormApk(p, k, a)) wreath.emplace_back(w, w.degree());

    BijectionRecord rec{n, p, Strategy::recursive};
    for (const BijectionPair& subPair : sub.pairs) {
        const Partition& gamma = subPair.lambda;
        const PPrimeBlock blk = block(n, p, k, gamma);

        std::vector<GlobalEntry> globals;
        for (const Partition& lambda : blk.members) globals.push_back({lambda, degree(lambda)});

        std::vector<LocalEntry> locals;
        for (const auto& [w, wd] : wreath) {
            NormalizerCharLabel ext = subPair.label;
            ext.digits.insert(ext.digits.begin(), {k, a, w});
            locals.push_back({std::move(ext), wd * subPair.dN});
        }
        // ascending, so the extremal partitions get minimal-degree labels
        std::sort(locals.begin(), locals.end(), [](const LocalEntry& x, const LocalEntry& y) {
            if (x.deg != y.deg) return x.deg < y.deg;
            return x.label < y.label;
        });

        const Partition lambda0 = plus(gamma, Partition({a * apk}));
        const Partition lambda1 = disjointUnion(gamma, Partition(std::vector<int>(a * apk, 1)));

        std::vector<BijectionPair> blockPairs;
        bool ok = true;
        for (const Partition& extremal : {lambda0, lambda1}) {
            auto it = std::find_if(globals.begin(), globals.end(), [&](const GlobalEntry& g) {
                return g.lambda == extremal;
            });
            if (it == globals.end() || locals.front().deg > it->deg) {
                ok = false;
                break;
            }
            blockPairs.push_back({it->lambda, locals.front().label, it->deg, locals.front().deg});
            globals.erase(it);
            locals.erase(locals.begin());
        }
        if (ok) {
            sortGlobalsDesc(globals);
            std::reverse(locals.begin(), locals.end());  // now descending
            for (std::size_t i = 0; i < globals.size(); ++i) {
                if (locals[i].deg > globals[i].deg) {
                    ok = false;
                    break;
                }
                blockPairs.push_back(
                    {globals[i].lambda, locals[i].label, globals[i].deg, locals[i].deg});
            }
        }
        if (!ok) {
            BijectionRecord fallback = buildGlobal(n, p);
            fallback.anomaly = true;
            return fallback;
        }
        rec.blockTrace.push_back({gamma, k, a, blk.members.size(), false});
        rec.pairs.insert(rec.pairs.end(), blockPairs.begin(), blockPairs.end());
    }
    return rec;
}

BijectionReport verifyBijection(const BijectionRecord& rec) {
    std::vector<Partition> expected = enumeratePPrime(rec.n, rec.p);
    std::sort(expected.begin(), expected.end());
    std::vector<Partition> got;
    for (const BijectionPair& pr : rec.pairs) got.push_back(pr.lambda);
    std::sort(got.begin(), got.end());
    if (got != expected)
        return {false, "partition side is not the p'-degree enumeration"};

    std::vector<NormalizerCharLabel> labels;
    for (const BijectionPair& pr : rec.pairs) labels.push_back(pr.label);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1]) return {false, "duplicate normalizer label"};
    if (countNormN(rec.n, rec.p) != static_cast<unsigned long>(labels.size()))
        return {false, "label count differs from the normalizer label count"};

    for (const BijectionPair& pr : rec.pairs) {
        if (pr.dS != degree(pr.lambda))
            return {false, "wrong symmetric-group degree at " + pr.lambda.str()};
        if (pr.dN != pr.label.degree())
            return {false, "wrong normalizer degree at " + pr.lambda.str()};
        if (pr.dN > pr.dS)
            return {false, "dominance violated at " + pr.lambda.str() + ": " + pr.dN.get_str() +
                               " > " + pr.dS.get_str()};
    }
    return {true, ""};
}

nlohmann::json pairToJson(const BijectionPair& pr) {
    nlohmann::json j;
    j["lambda"] = pr.lambda.parts();
    j["label"] = pr.label.toJson();
    j["dS"] = pr.dS.get_str();
    j["dN"] = pr.dN.get_str();
    return j;
}

}  // namespace mckay
