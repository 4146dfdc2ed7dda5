#include "mckay/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>

#include "mckay/abacus.hpp"
#include "mckay/lr.hpp"
#include "mckay/normalizer.hpp"
#include "mckay/sylow.hpp"
#include "mckay/sym_char.hpp"

namespace mckay {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

long intPow(int b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

BigInt bigPow(long base, long exp) {
    BigInt b = base, r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

bool isPrime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CheckResult fail(CheckResult r, nlohmann::json witness, Clock::time_point t0) {
    r.status = CheckResult::Status::fail;
    r.witness = std::move(witness);
    r.elapsedSeconds = secondsSince(t0);
    return r;
}

CheckResult pass(CheckResult r, Clock::time_point t0) {
    r.status = CheckResult::Status::pass;
    r.elapsedSeconds = secondsSince(t0);
    return r;
}

// for checks that stored their witness on the result already
CheckResult failStored(CheckResult r, Clock::time_point t0) {
    r.status = CheckResult::Status::fail;
    r.elapsedSeconds = secondsSince(t0);
    return r;
}

}  // namespace

nlohmann::json CheckResult::toJson() const {
    nlohmann::json j;
    j["checkId"] = checkId;
    j["params"] = params;
    j["status"] = status == Status::pass ? "pass" : status == Status::fail ? "fail" : "skipped";
    if (!witness.is_null()) j["witness"] = witness;
    j["elapsed"] = elapsedSeconds;
    return j;
}

CheckResult checkMinDegrees(int nLo, int nHi) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "min-degrees";
    r.params = {{"nLo", nLo}, {"nHi", nHi}};
    if (nLo < 5 || nHi > 40 || nLo > nHi)
        return fail(std::move(r), {{"reason", "range must lie in [5,40]"}}, t0);

    for (int n = nLo; n <= nHi; ++n) {
        const BigInt bound2 = BigInt(n) * (n - 3) / 2;
        const BigInt bound3 = BigInt(n) * (n - 1) * (n - 5) / 6;
        BigInt min2 = -1, min3 = -1;
        for (const Partition& lambda : partitionsOf(n)) {
            const BigInt d = degree(lambda);
            if (d > 1 && d < n - 1)
                return fail(std::move(r), {{"n", n}, {"lambda", lambda.parts()}, {"degree", d.get_str()}},
                            t0);
            if (n >= 9 && inBox(lambda, n - 2) && (min2 < 0 || d < min2)) min2 = d;
            if (n >= 15 && inBox(lambda, n - 3) && (min3 < 0 || d < min3)) min3 = d;
        }
        if (n >= 9 && min2 != bound2)
            return fail(std::move(r), {{"n", n}, {"boxMin", min2.get_str()}, {"expected", bound2.get_str()}},
                        t0);
        if (n >= 15 && min3 != bound3)
            return fail(std::move(r), {{"n", n}, {"boxMin", min3.get_str()}, {"expected", bound3.get_str()}},
                        t0);
    }
    return pass(std::move(r), t0);
}

CheckResult checkGridInequalities() {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "grid-inequalities";
    r.params = {{"pMax", 97}, {"kMax", 12}, {"note", "integer lattice points only"}};

    // six times the third function, kept integral
    const auto sixF3 = [](int p, int k) -> BigInt {
        return bigPow(p - 1, 3LL * k) + 9 * bigPow(p - 1, 2LL * k) + 8 * bigPow(p - 1, k) -
               12 * bigPow(p, 2LL * k) - 6 * bigPow(p, k);
    };

    for (int p = 5; p <= 97; ++p) {
        if (!isPrime(p)) continue;
        for (int k = 2; k <= 12; ++k) {
            for (int a = 1; a <= p - 1; ++a)
                if (BigInt(a) * bigPow(p, k - 1) < BigInt(a) * k + (a - 1) + (p - 2))
                    return fail(std::move(r), {{"which", "digit-exponent"}, {"p", p}, {"k", k}, {"a", a}},
                                t0);
            const BigInt f = bigPow(p - 1, 3LL * k) + 3 * bigPow(p - 1, k) - 2 * bigPow(p, 2LL * k) -
                             2 * bigPow(p, k);
            if (f < 0)
                return fail(std::move(r), {{"which", "three-set"}, {"p", p}, {"k", k}, {"f", f.get_str()}},
                            t0);
            const bool inDomain = p >= 7 || k >= 3;
            const BigInt g = sixF3(p, k);
            if (inDomain && g < 0)
                return fail(std::move(r), {{"which", "three-set-small-a"}, {"p", p}, {"k", k}, {"6f", g.get_str()}},
                            t0);
        }
    }
    // the one expected negative point
    if (sixF3(5, 2) >= 0)
        return fail(std::move(r), {{"which", "expected-exception"}, {"p", 5}, {"k", 2}}, t0);
    r.params["exceptionValueTimes6"] = sixF3(5, 2).get_str();
    return pass(std::move(r), t0);
}

CheckResult checkCounting(int n, int p) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "counting";
    r.params = {{"n", n}, {"p", p}};

    const auto enumerated = enumeratePPrime(n, p);
    const BigInt localCount = countNormN(n, p);
    if (localCount != static_cast<long>(enumerated.size()))
        return fail(std::move(r),
                    {{"global", enumerated.size()}, {"local", localCount.get_str()}}, t0);
    if (n <= 20) {
        const auto brute = enumeratePPrimeBruteForce(n, p);
        std::vector<Partition> a = enumerated, b = brute;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return fail(std::move(r), {{"reason", "digit enumeration differs from degree filter"},
                                       {"enumerated", a.size()}, {"bruteForce", b.size()}},
                        t0);
    }
    r.params["count"] = enumerated.size();
    return pass(std::move(r), t0);
}

namespace {

// |Δ_x| per invariant value x, by counting placements of multisets of
// nonempty partitions on `slots` runners.
std::map<int, BigInt> strataByPlacement(int slots, int total) {
    std::vector<Partition> pool;
    for (int s = 1; s <= total; ++s)
        for (const Partition& q : partitionsOf(s)) pool.push_back(q);

    std::map<int, BigInt> out;
    std::map<Partition, int> mult;
    std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t from, int rem, int chosen,
                                                              int inv) {
        if (rem == 0) {
            BigInt ways = 1;
            for (int i = 0; i < chosen; ++i) ways *= slots - i;
            for (const auto& [q, m] : mult) ways /= factorial(m);
            out[inv] += ways;
            return;
        }
        if (chosen == slots) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (pool[i].size() > rem) continue;
            ++mult[pool[i]];
            rec(i, rem - pool[i].size(), chosen + 1,
                std::max({inv, pool[i].first(), pool[i].length()}));
            if (--mult[pool[i]] == 0) mult.erase(pool[i]);
        }
    };
    rec(0, total, 0, 0);
    return out;
}

}  // namespace

CheckResult checkStrataSizes(int p, int k, int a, const Partition& gamma) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "strata-sizes";
    r.params = {{"p", p}, {"k", k}, {"a", a}, {"gamma", gamma.parts()}};

    const int pk = static_cast<int>(intPow(p, k));
    if (a < 2 || !isCore(gamma, pk))
        return fail(std::move(r), {{"reason", "parameters out of range"}}, t0);

    std::map<int, BigInt> expected;
    expected[a] = 2 * bigPow(p, k);
    if (a >= 3)
        expected[a - 1] =
            a == 3 ? BigInt(2 * bigPow(p, 2 * k) - bigPow(p, k)) : BigInt(2 * bigPow(p, 2 * k));
    if (a >= 6) expected[a - 2] = bigPow(p, 3 * k) + 3 * bigPow(p, 2 * k);

    const std::map<int, BigInt> counted = strataByPlacement(pk, a);
    for (const auto& [x, want] : expected) {
        const auto it = counted.find(x);
        const BigInt got = it == counted.end() ? BigInt(0) : it->second;
        if (got != want)
            return fail(std::move(r),
                        {{"x", x}, {"counted", got.get_str()}, {"expected", want.get_str()}}, t0);
    }

    if (k == 1) {
        // independent route: materialize the members and classify them
        std::map<int, BigInt> enumerated;
        bool bad = false;
        Partition badLambda;
        forEachPartitionTuple(pk, a, [&](const std::vector<Partition>& tuple) {
            const Partition lambda = fromCoreQuotient(gamma, tuple, pk);
            if (coreQuotient(lambda, pk).core != gamma) {
                bad = true;
                badLambda = lambda;
            }
            enumerated[nSInvariant(lambda, pk)] += 1;
        });
        if (bad)
            return fail(std::move(r), {{"reason", "core mismatch"}, {"lambda", badLambda.parts()}}, t0);
        for (const auto& [x, want] : expected)
            if (enumerated[x] != want)
                return fail(std::move(r), {{"x", x}, {"enumerated", enumerated[x].get_str()},
                                           {"expected", want.get_str()}},
                            t0);
    }
    return pass(std::move(r), t0);
}

CheckResult checkFamilySizes(int p, int k, int a) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "family-sizes";
    r.params = {{"p", p}, {"k", k}, {"a", a}};

    const BigInt m = bigPow(p - 1, k);
    const auto sizeOf = [&](SubsetFamily f) {
        return static_cast<long>(distinguishedSubset(p, k, a, f).size());
    };
    const auto check = [&](const char* name, const BigInt& got, const BigInt& want) {
        if (got != want)
            r.witness = {{"family", name}, {"size", got.get_str()}, {"expected", want.get_str()}};
        return got == want;
    };

    using F = SubsetFamily;
    const auto x0 = distinguishedSubset(p, k, a, F::X0);
    if (!check("X0", static_cast<long>(x0.size()), 2 * m)) return failStored(std::move(r), t0);
    for (const WreathAssignment& w : x0)
        if (w.degree() != 1)
            return fail(std::move(r), {{"family", "X0"}, {"reason", "nonlinear member"}}, t0);

    const auto x = distinguishedSubset(p, k, a, F::X);
    const BigInt xWant = a == 2 ? 2 * m : a == 3 ? 3 * m : 4 * m;
    if (!check("X", static_cast<long>(x.size()), xWant)) return failStored(std::move(r), t0);
    {
        const std::set<WreathAssignment> inner(x0.begin(), x0.end());
        for (const WreathAssignment& w : x)
            if (!inner.count(w) && w.degree() != a - 1)
                return fail(std::move(r), {{"family", "X"}, {"reason", "unexpected degree"},
                                           {"degree", w.degree().get_str()}},
                            t0);
    }

    const auto y0 = distinguishedSubset(p, k, a, F::Y0);
    const BigInt y0Want = a == 2 ? BigInt(m * (m - 1) / 2) : BigInt(2 * m * (m - 1));
    if (!check("Y0", static_cast<long>(y0.size()), y0Want)) return failStored(std::move(r), t0);
    for (const WreathAssignment& w : y0)
        if (w.degree() != a)
            return fail(std::move(r), {{"family", "Y0"}, {"reason", "degree is not a"}}, t0);

    if (a >= 3) {
        const BigInt yWant = BigInt(a == 3 ? 2 : a == 4 ? 3 : 4) * m * (m - 1);
        const auto y = distinguishedSubset(p, k, a, F::Y);
        if (!check("Y", static_cast<long>(y.size()), yWant)) return failStored(std::move(r), t0);
        if (a >= 4 && BigInt(static_cast<long>(y.size())) < 3 * m * (m - 1))
            return fail(std::move(r), {{"family", "Y"}, {"reason", "below stated lower bound"}}, t0);
        for (const WreathAssignment& w : y)
            if (w.degree() > BigInt(a) * (a - 2))
                return fail(std::move(r), {{"family", "Y"}, {"reason", "degree above a(a-2)"}}, t0);

        const BigInt c3 = m * (m - 1) * (m - 2) / 6;
        const BigInt zWant = a == 3 ? c3 : 6 * c3;
        const auto z = distinguishedSubset(p, k, a, F::Z);
        if (!check("Z", static_cast<long>(z.size()), zWant)) return failStored(std::move(r), t0);
        for (const WreathAssignment& w : z)
            if (w.degree() > BigInt(a) * (a - 1))
                return fail(std::move(r), {{"family", "Z"}, {"reason", "degree above a(a-1)"}}, t0);
    }

    if (k == 1 && a >= 6) {
        const BigInt pb = p;
        if (!check("W", sizeOf(F::W), 2 * pb * pb * pb - 12 * pb * pb + 22 * pb - 12))
            return failStored(std::move(r), t0);
        for (const WreathAssignment& w : distinguishedSubset(p, k, a, F::W))
            if (w.degree() > BigInt(a) * (a - 1) * (a - 3))
                return fail(std::move(r), {{"family", "W"}, {"reason", "degree above a(a-1)(a-3)"}}, t0);
        if (!check("V", sizeOf(F::V), 8 * pb * pb - 24 * pb + 16))
            return failStored(std::move(r), t0);
    }
    if (k == 1 && a >= 8) {
        const BigInt pb = p;
        if (!check("Z4", sizeOf(F::Z4),
                   2 * pb * pb * pb * pb - 20 * pb * pb * pb + 70 * pb * pb - 100 * pb + 48))
            return failStored(std::move(r), t0);
    }

    if (a == 2) {
        const auto mset = caseOneMSet(p, k);
        if (!check("M", static_cast<long>(mset.size()), m * (m - 1) / 2))
            return failStored(std::move(r), t0);
        for (const WreathAssignment& w : mset)
            if (w.degree() != 2)
                return fail(std::move(r), {{"family", "M"}, {"reason", "degree is not 2"}}, t0);
    }
    r.witness = nullptr;
    return pass(std::move(r), t0);
}

CheckResult checkMaxDegree(int p, int k, int a) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "max-degree";
    r.params = {{"p", p}, {"k", k}, {"a", a}};

    BigInt d = 0;
    for (const Partition& mu : partitionsOf(a)) d = std::max(d, degree(mu));
    const BigInt expected = bigPow(p - 1, static_cast<long>(a) * k) * d;

    BigInt maxDeg = 0;
    for (const WreathAssignment& w : enumNormApk(p, k, a)) maxDeg = std::max(maxDeg, w.degree());
    if (maxDeg != expected)
        return fail(std::move(r), {{"max", maxDeg.get_str()}, {"expected", expected.get_str()}}, t0);
    r.params["value"] = expected.get_str();
    return pass(std::move(r), t0);
}

CheckResult checkHookAddition(const Partition& gamma, int x) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "hook-addition";
    r.params = {{"gamma", gamma.parts()}, {"x", x}};
    if (!isCore(gamma, x)) return fail(std::move(r), {{"reason", "gamma is not an x-core"}}, t0);

    const auto parts = addHookPartitions(gamma, x);
    for (int i = 0; i < x; ++i) {
        const Partition& lam = parts[i];
        if (lam.size() != gamma.size() + x || coreQuotient(lam, x).core != gamma)
            return fail(std::move(r), {{"i", i}, {"lambda", lam.parts()}, {"reason", "core mismatch"}},
                        t0);
        std::vector<int> hookParts{x - i};
        hookParts.insert(hookParts.end(), i, 1);
        if (gamma.empty() ? lam != Partition(hookParts)
                          : lrCoeff(lam, Partition(hookParts), gamma) <= 0)
            return fail(std::move(r),
                        {{"i", i}, {"lambda", lam.parts()}, {"reason", "missing hook constituent"}},
                        t0);
    }
    return pass(std::move(r), t0);
}

CheckResult checkStarInclusion(int p, int k, int sampleSize, std::uint64_t seed, long long cap) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "star-inclusion";
    r.params = {{"p", p}, {"k", k}, {"sampleSize", sampleSize}, {"seed", seed}};

    std::vector<Partition> sample;
    if (k == 1) {
        sample = partitionsOf(p);
    } else {
        std::vector<Partition> pool;
        for (const Partition& lambda : partitionsOf(static_cast<int>(intPow(p, k))))
            if (inBox(lambda, mStarBound(p, k))) pool.push_back(lambda);
        std::mt19937_64 rng(seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        if (static_cast<int>(pool.size()) < sampleSize)
            return fail(std::move(r), {{"reason", "box smaller than requested sample"}}, t0);
        sample.assign(pool.begin(), pool.begin() + sampleSize);
    }
    r.params["actualSample"] = sample.size();

    const OmegaStarReport rep = omegaStarCheck(p, k, sample, cap);
    if (!rep.ok()) {
        nlohmann::json w;
        for (const Partition& q : rep.missingFromOmega) w["missing"].push_back(q.parts());
        for (const Partition& q : rep.belowDegreeBound) w["lowDegree"].push_back(q.parts());
        return fail(std::move(r), std::move(w), t0);
    }
    return pass(std::move(r), t0);
}

CheckResult checkStarDegreeBounds(int p, int k, int a, long long cap) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.checkId = "star-degree-bounds";
    r.params = {{"p", p}, {"k", k}, {"a", a}};
    if (a != 1) {
        r.status = CheckResult::Status::skipped;
        r.params["note"] = "multi-copy digits need restriction to a composite tower";
        r.elapsedSeconds = secondsSince(t0);
        return r;
    }

    StarRestriction sr(p, k, cap);
    const StarLabel star = StarLabel::star(p, k);
    const BigInt bound = bigPow(p - 1, intPow(p, k - 1));
    const BigInt boundDigit = bigPow(p - 1, k) * factorial(a) * factorial(p - 1);

    BigInt minDeg = -1;
    for (const Partition& lambda : partitionsOf(static_cast<int>(intPow(p, k)))) {
        if (sr.multiplicity(lambda, star) == 0) continue;
        const BigInt d = degree(lambda);
        if (d < bound)
            return fail(std::move(r),
                        {{"lambda", lambda.parts()}, {"degree", d.get_str()}, {"bound", bound.get_str()}},
                        t0);
        if (k >= 2 && d < boundDigit)
            return fail(std::move(r), {{"lambda", lambda.parts()}, {"degree", d.get_str()},
                                       {"digitBound", boundDigit.get_str()}},
                        t0);
        if (minDeg < 0 || d < minDeg) minDeg = d;
    }
    if (k == 1 && minDeg != p - 1)
        return fail(std::move(r), {{"minDegree", minDeg.get_str()}, {"expected", p - 1}}, t0);
    r.params["minDegree"] = minDeg.get_str();
    return pass(std::move(r), t0);
}

std::vector<CheckResult> runAll(std::uint64_t seed) {
    std::vector<std::function<CheckResult()>> jobs;
    jobs.push_back([] { return checkMinDegrees(5, 28); });
    jobs.push_back([] { return checkGridInequalities(); });
    for (auto [n, p] : std::vector<std::pair<int, int>>{
             {20, 2}, {21, 3}, {30, 5}, {40, 7}, {22, 11}, {26, 13}})
        jobs.push_back([n, p] { return checkCounting(n, p); });

    const Partition empty, one({1}), twoOne({2, 1});
    for (const Partition& g : {empty, one, twoOne}) {
        for (int a : {2, 3, 4, 6}) jobs.push_back([g, a] { return checkStrataSizes(5, 1, a, g); });
        jobs.push_back([g] { return checkStrataSizes(7, 1, 6, g); });
        for (int a : {3, 4}) jobs.push_back([g, a] { return checkStrataSizes(5, 2, a, g); });
        for (int a : {4, 6}) jobs.push_back([g, a] { return checkStrataSizes(7, 2, a, g); });
    }

    for (int a : {2, 3, 4}) jobs.push_back([a] { return checkFamilySizes(5, 1, a); });
    jobs.push_back([] { return checkFamilySizes(7, 1, 6); });
    jobs.push_back([] { return checkFamilySizes(11, 1, 8); });
    jobs.push_back([] { return checkFamilySizes(13, 1, 8); });
    jobs.push_back([] { return checkFamilySizes(5, 2, 3); });

    for (int a : {1, 2, 3, 4}) jobs.push_back([a] { return checkMaxDegree(5, 1, a); });
    jobs.push_back([] { return checkMaxDegree(7, 1, 5); });
    jobs.push_back([] { return checkMaxDegree(5, 2, 2); });

    jobs.push_back([] { return checkHookAddition(Partition(), 5); });
    jobs.push_back([] { return checkHookAddition(Partition({1}), 3); });
    jobs.push_back([] { return checkHookAddition(Partition({2, 1}), 4); });
    jobs.push_back([] { return checkHookAddition(Partition({3, 1}), 5); });

    jobs.push_back([seed] { return checkStarInclusion(5, 1, 0, seed); });
    jobs.push_back([seed] { return checkStarInclusion(5, 2, 100, seed); });
    jobs.push_back([] { return checkStarDegreeBounds(5, 1, 1); });
    jobs.push_back([] { return checkStarDegreeBounds(5, 2, 1); });
    jobs.push_back([] { return checkStarDegreeBounds(7, 1, 1); });

    std::vector<std::future<CheckResult>> futures;
    for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    std::vector<CheckResult> results;
    for (auto& f : futures) results.push_back(f.get());
    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.checkId != b.checkId) return a.checkId < b.checkId;
        return a.params.dump() < b.params.dump();
    });
    return results;
}

}  // namespace mckay
