#include "mckay/sylow.hpp"

#include <stdexcept>

namespace mckay {

namespace {

long long intPow(int b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

WreathElement WreathElement::identity(int p, int level) {
    WreathElement g;
    g.p_ = p;
    g.level_ = level;
    if (level >= 1) g.base_.assign(p, identity(p, level - 1));
    return g;
}

WreathElement WreathElement::mul(const WreathElement& rhs) const {
    if (p_ != rhs.p_ || level_ != rhs.level_)
        throw std::invalid_argument("WreathElement::mul: mismatched shapes");
    if (level_ == 0) return *this;
    WreathElement out;
    out.p_ = p_;
    out.level_ = level_;
    out.top_ = (top_ + rhs.top_) % p_;
    out.base_.reserve(p_);
    // point in block b first sees rhs, then lands in block b + rhs.top
    for (int b = 0; b < p_; ++b)
        out.base_.push_back(base_[(b + rhs.top_) % p_].mul(rhs.base_[b]));
    return out;
}

Partition WreathElement::cycleType() const {
    if (level_ == 0) return Partition({1});
    if (top_ == 0) {
        Partition type;
        for (const WreathElement& g : base_) type = disjointUnion(type, g.cycleType());
        return type;
    }
    // one block cycle of length p; stretch the cycle product's cycles by p
    WreathElement acc = base_[0];
    int pos = top_;
    for (int i = 1; i < p_; ++i) {
        acc = base_[pos].mul(acc);
        pos = (pos + top_) % p_;
    }
    const Partition inner = acc.cycleType();
    std::vector<int> parts;
    for (int d : inner.parts()) parts.push_back(p_ * d);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::vector<WreathElement> allWreathElements(int p, int level) {
    if (level == 0) return {WreathElement::identity(p, 0)};
    const std::vector<WreathElement> prev = allWreathElements(p, level - 1);
    std::vector<WreathElement> out;
    std::vector<std::size_t> idx(p, 0);
    while (true) {
        WreathElement g;
        g.p_ = p;
        g.level_ = level;
        g.base_.reserve(p);
        for (int b = 0; b < p; ++b) g.base_.push_back(prev[idx[b]]);
        for (int h = 0; h < p; ++h) {
            g.top_ = h;
            out.push_back(g);
        }
        int b = p - 1;
        while (b >= 0 && idx[b] + 1 == prev.size()) idx[b--] = 0;
        if (b < 0) break;
        ++idx[b];
    }
    return out;
}

StarLabel StarLabel::star(int p, int k) {
    return {p, std::vector<int>(k, 1)};
}

int linExponent(const StarLabel& s, const WreathElement& g) {
    if (static_cast<int>(s.s.size()) != g.level() || s.p != g.p())
        throw std::invalid_argument("linExponent: label level must match element level");
    const int k = g.level();
    if (k == 0) return 0;
    const int p = g.p();
    const StarLabel prefix{p, std::vector<int>(s.s.begin(), s.s.end() - 1)};
    int e;
    if (g.top() == 0) {
        e = 0;
        for (const WreathElement& child : g.base()) e += linExponent(prefix, child);
    } else {
        WreathElement acc = g.base()[0];
        int pos = g.top();
        for (int i = 1; i < p; ++i) {
            acc = g.base()[pos].mul(acc);
            pos = (pos + g.top()) % p;
        }
        e = s.s[k - 1] * g.top() + linExponent(prefix, acc);
    }
    return e % p;
}

void CycloInt::addRootPower(int e, const BigInt& mult) {
    e %= p;
    if (e < 0) e += p;
    if (e < p - 1)
        c[e] += mult;
    else
        for (BigInt& ci : c) ci -= mult;  // ω^{p−1} = −(1 + ω + … + ω^{p−2})
}

void CycloInt::add(const CycloInt& o) {
    for (int i = 0; i < p - 1; ++i) c[i] += o.c[i];
}

bool CycloInt::isRationalInteger() const {
    for (int i = 1; i < p - 1; ++i)
        if (c[i] != 0) return false;
    return true;
}

int mStarBound(int p, int k) {
    if (k == 1) return p - 1;
    return static_cast<int>(intPow(p, k) - intPow(p, k - 1) - intPow(p, k - 2));
}

StarRestriction::StarRestriction(int p, int k, long long cap) : p_(p), k_(k) {
    const long long exp = (intPow(p, k) - 1) / (p - 1);
    mpz_ui_pow_ui(order_.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(exp));
    if (cmp(order_, static_cast<long>(cap)) > 0)
        throw std::invalid_argument("StarRestriction: group order exceeds the enumeration cap");

    for (const WreathElement& g : allWreathElements(p, k)) {
        std::vector<int> profile(k, 0);
        for (int j = 0; j < k; ++j) {
            StarLabel unit{p, std::vector<int>(k, 0)};
            unit.s[j] = 1;
            profile[j] = linExponent(unit, g);
        }
        ++groups_[{g.cycleType(), std::move(profile)}];
    }
}

std::size_t StarRestriction::cycleTypeCount() const {
    std::size_t n = 0;
    Partition last;
    bool first = true;
    for (const auto& [key, cnt] : groups_)
        if (first || key.first != last) {
            ++n;
            last = key.first;
            first = false;
        }
    return n;
}

BigInt StarRestriction::multiplicity(const Partition& lambda, const StarLabel& s) {
    if (lambda.size() != intPow(p_, k_))
        throw std::invalid_argument("StarRestriction::multiplicity: |lambda| must be p^k");
    if (static_cast<int>(s.s.size()) != k_ || s.p != p_)
        throw std::invalid_argument("StarRestriction::multiplicity: label level mismatch");

    CycloInt sum(p_);
    for (const auto& [key, count] : groups_) {
        const auto& [type, profile] = key;
        int e = 0;
        for (int j = 0; j < k_; ++j) e += s.s[j] * profile[j];
        BigInt term(static_cast<long>(mn_.value(lambda, type)));
        mpz_mul_si(term.get_mpz_t(), term.get_mpz_t(), static_cast<long>(count));
        sum.addRootPower(-e, term);  // conjugate of ω^e
    }
    if (!sum.isRationalInteger())
        throw std::logic_error("StarRestriction: inner product is not a rational integer");
    const BigInt num = sum.rationalPart();
    if (num % order_ != 0 || num < 0)
        throw std::logic_error("StarRestriction: inner product is not a nonnegative multiple of |P|");
    return num / order_;
}

OmegaStarReport omegaStarCheck(int p, int k, const std::vector<Partition>& sample, long long cap) {
    StarRestriction sr(p, k, cap);
    const StarLabel star = StarLabel::star(p, k);
    OmegaStarReport rep;
    rep.p = p;
    rep.k = k;
    mpz_ui_pow_ui(rep.degreeBound.get_mpz_t(), static_cast<unsigned long>(p - 1),
                  static_cast<unsigned long>(intPow(p, k - 1)));
    const int box = mStarBound(p, k);
    for (const Partition& lambda : sample) {
        const BigInt m = sr.multiplicity(lambda, star);
        if (inBox(lambda, box) && m == 0) rep.missingFromOmega.push_back(lambda);
        if (m > 0 && degree(lambda) < rep.degreeBound) rep.belowDegreeBound.push_back(lambda);
        ++rep.checked;
    }
    return rep;
}

}  // namespace mckay
