#include "mckay/normalizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mckay {

namespace {

long long intPow(int b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

BigInt bigPow(int base, int exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

BigInt NormPkLabel::degree() const {
    return bigPow(p - 1, k - static_cast<int>(zset.size()));
}

std::vector<NormPkLabel> enumNormPk(int p, int k) {
    if (p < 2 || k < 1) throw std::invalid_argument("enumNormPk: need p >= 2, k >= 1");
    std::vector<NormPkLabel> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        NormPkLabel base{p, k, {}, {}};
        for (int i = 1; i <= k; ++i)
            if (mask & (1u << (i - 1))) base.zset.push_back(i);
        const int z = static_cast<int>(base.zset.size());
        // all twist vectors in [0, p-2]^z, odometer order
        std::vector<int> tw(z, 0);
        while (true) {
            NormPkLabel l = base;
            l.twist = tw;
            out.push_back(std::move(l));
            int i = z - 1;
            while (i >= 0 && tw[i] == p - 2) tw[i--] = 0;
            if (i < 0) break;
            ++tw[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int WreathAssignment::a() const {
    int total = 0;
    for (const WreathPair& pr : pairs) total += pr.mu.size();
    return total;
}

BigInt WreathAssignment::degree() const {
    BigInt d = factorial(a());
    for (const WreathPair& pr : pairs) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), pr.theta.degree().get_mpz_t(),
                   static_cast<unsigned long>(pr.mu.size()));
        d *= t * mckay::degree(pr.mu);
        d /= factorial(pr.mu.size());
    }
    return d;
}

std::vector<WreathAssignment> enumNormApk(int p, int k, int a) {
    if (a < 1 || a > p - 1)
        throw std::invalid_argument("enumNormApk: need 1 <= a <= p-1");
    const std::vector<NormPkLabel> labels = enumNormPk(p, k);
    std::vector<WreathAssignment> out;
    forEachPartitionTuple(static_cast<int>(labels.size()), a,
                          [&](const std::vector<Partition>& tuple) {
                              WreathAssignment w;
                              for (std::size_t i = 0; i < labels.size(); ++i)
                                  if (!tuple[i].empty()) w.pairs.push_back({labels[i], tuple[i]});
                              out.push_back(std::move(w));
                          });
    return out;
}

BigInt NormalizerCharLabel::degree() const {
    BigInt d = mckay::degree(tail);
    for (const NormalizerDigit& dg : digits) d *= dg.assign.degree();
    return d;
}

nlohmann::json NormalizerCharLabel::toJson() const {
    nlohmann::json j;
    j["digits"] = nlohmann::json::array();
    for (const NormalizerDigit& dg : digits) {
        nlohmann::json jd;
        jd["k"] = dg.k;
        jd["a"] = dg.a;
        jd["assign"] = nlohmann::json::array();
        for (const WreathPair& pr : dg.assign.pairs) {
            nlohmann::json jp;
            jp["zset"] = pr.theta.zset;
            jp["twist"] = pr.theta.twist;
            jp["mu"] = pr.mu.parts();
            jd["assign"].push_back(jp);
        }
        j["digits"].push_back(jd);
    }
    j["tail"] = tail.parts();
    return j;
}

namespace {

struct Digit {
    int k, a;
};

// nonzero p-adic digits of n, descending k; a0 returned separately
std::pair<std::vector<Digit>, int> pAdicDigits(int n, int p) {
    std::vector<Digit> digits;
    int k = 0;
    long long pk = 1;
    while (pk * p <= n) {
        pk *= p;
        ++k;
    }
    int rem = n;
    for (; k >= 1; --k, pk /= p) {
        const int a = static_cast<int>(rem / pk);
        rem = static_cast<int>(rem % pk);
        if (a > 0) digits.push_back({k, a});
    }
    return {digits, rem};
}

}  // namespace

std::vector<NormalizerCharLabel> enumNormN(int n, int p) {
    if (n < 0 || p < 2) throw std::invalid_argument("enumNormN: need n >= 0, prime p");
    const auto [digits, a0] = pAdicDigits(n, p);

    std::vector<NormalizerCharLabel> out;
    out.push_back({p, {}, Partition()});
    for (const Digit& d : digits) {
        std::vector<NormalizerCharLabel> next;
        for (const WreathAssignment& w : enumNormApk(p, d.k, d.a))
            for (const NormalizerCharLabel& l : out) {
                NormalizerCharLabel ext = l;
                ext.digits.push_back({d.k, d.a, w});
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    std::vector<NormalizerCharLabel> withTail;
    for (const Partition& t : partitionsOf(a0))
        for (const NormalizerCharLabel& l : out) {
            NormalizerCharLabel ext = l;
            ext.tail = t;
            withTail.push_back(std::move(ext));
        }
    return withTail;
}

BigInt countNormN(int n, int p) {
    const auto [digits, a0] = pAdicDigits(n, p);

    // truncated series multiplication; series[s] counts weight-s choices
    auto mulSeries = [](const std::vector<BigInt>& f, const std::vector<BigInt>& g, int cap) {
        std::vector<BigInt> h(cap + 1, 0);
        for (int i = 0; i <= cap; ++i)
            for (int j = 0; i + j <= cap; ++j) h[i + j] += f[i] * g[j];
        return h;
    };

    BigInt total = static_cast<unsigned long>(partitionsOf(a0).size());
    for (const Digit& d : digits) {
        std::vector<BigInt> pgf(d.a + 1);
        for (int s = 0; s <= d.a; ++s) pgf[s] = static_cast<unsigned long>(partitionsOf(s).size());
        std::vector<BigInt> acc(d.a + 1, 0);
        acc[0] = 1;
        long long e = intPow(p, d.k);
        std::vector<BigInt> sq = pgf;
        while (e > 0) {
            if (e & 1) acc = mulSeries(acc, sq, d.a);
            sq = mulSeries(sq, sq, d.a);
            e >>= 1;
        }
        total *= acc[d.a];
    }
    return total;
}

namespace {

std::vector<Partition> conjClosure(const std::vector<Partition>& shapes) {
    std::set<Partition> s;
    for (const Partition& q : shapes) {
        s.insert(q);
        s.insert(q.conjugate());
    }
    return {s.begin(), s.end()};
}

Partition row(int x) { return x > 0 ? Partition(std::vector<int>{x}) : Partition(); }

WreathAssignment assign(std::vector<WreathPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    return {std::move(pairs)};
}

}  // namespace

std::vector<WreathAssignment> distinguishedSubset(int p, int k, int a, SubsetFamily family) {
    if (a < 2 || a > p - 1)
        throw std::invalid_argument("distinguishedSubset: need 2 <= a <= p-1");
    using F = SubsetFamily;
    if ((family == F::Y || family == F::Z) && a < 3)
        throw std::invalid_argument("distinguishedSubset: family needs a >= 3");
    if ((family == F::W || family == F::V) && (k != 1 || a < 6))
        throw std::invalid_argument("distinguishedSubset: family needs k = 1, a >= 6");
    if (family == F::Z4 && (k != 1 || a < 8))
        throw std::invalid_argument("distinguishedSubset: family needs k = 1, a >= 8");

    std::vector<NormPkLabel> lin;
    for (const NormPkLabel& l : enumNormPk(p, k))
        if (l.linear()) lin.push_back(l);
    const int m = static_cast<int>(lin.size());
    const Partition one = row(1);

    std::set<WreathAssignment> out;
    switch (family) {
        case F::X0:
        case F::X: {
            std::vector<Partition> shapes{row(a)};
            if (family == F::X) shapes.push_back(Partition({a - 1, 1}));
            for (const NormPkLabel& phi : lin)
                for (const Partition& nu : conjClosure(shapes))
                    out.insert(assign({{phi, nu}}));
            break;
        }
        case F::Y0:
        case F::Y: {
            std::vector<Partition> shapes{row(a - 1)};
            if (family == F::Y) shapes.push_back(Partition({a - 2, 1}));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    for (const Partition& nu : conjClosure(shapes))
                        out.insert(assign({{lin[i], nu}, {lin[j], one}}));
                }
            break;
        }
        case F::Z:
        case F::W: {
            std::vector<Partition> shapes{row(a - 2)};
            if (family == F::W) shapes.push_back(Partition({a - 3, 1}));
            for (int i = 0; i < m; ++i)
                for (int j1 = 0; j1 < m; ++j1)
                    for (int j2 = j1 + 1; j2 < m; ++j2) {
                        if (j1 == i || j2 == i) continue;
                        for (const Partition& nu : conjClosure(shapes))
                            out.insert(assign({{lin[i], nu}, {lin[j1], one}, {lin[j2], one}}));
                    }
            break;
        }
        case F::V: {
            const auto nus = conjClosure({row(a - 2), Partition({a - 3, 1})});
            const auto rhos = conjClosure({row(2)});
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    for (const Partition& nu : nus)
                        for (const Partition& rho : rhos)
                            out.insert(assign({{lin[i], nu}, {lin[j], rho}}));
                }
            break;
        }
        case F::Z4: {
            const auto nus = conjClosure({row(a - 4)});
            const auto rhos = conjClosure({row(2)});
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    for (int j1 = 0; j1 < m; ++j1)
                        for (int j2 = j1 + 1; j2 < m; ++j2) {
                            if (j1 == i || j2 == i || j1 == j || j2 == j) continue;
                            for (const Partition& nu : nus)
                                for (const Partition& rho : rhos)
                                    out.insert(assign(
                                        {{lin[i], nu}, {lin[j], rho}, {lin[j1], one}, {lin[j2], one}}));
                        }
                }
            break;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<WreathAssignment> caseOneMSet(int p, int k) {
    std::vector<NormPkLabel> lin;
    for (const NormPkLabel& l : enumNormPk(p, k))
        if (l.linear()) lin.push_back(l);
    const Partition one = row(1);
    std::vector<WreathAssignment> out;
    for (std::size_t i = 0; i < lin.size(); ++i)
        for (std::size_t j = i + 1; j < lin.size(); ++j)
            out.push_back(assign({{lin[i], one}, {lin[j], one}}));
    return out;
}

}  // namespace mckay
