#include "mckay/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mckay {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[j];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

Partition plus(const Partition& a, const Partition& b) {
    std::vector<int> out(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.part(static_cast<int>(i)) + b.part(static_cast<int>(i));
    return Partition(std::move(out));
}

Partition disjointUnion(const Partition& a, const Partition& b) {
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

bool inBox(const Partition& lambda, int t) {
    return lambda.first() <= t && lambda.length() <= t;
}

std::vector<std::vector<int>> hookLengths(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> out(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) {
        out[i].resize(lambda.part(i));
        for (int j = 0; j < lambda.part(i); ++j)
            out[i][j] = lambda.part(i) - j + conj.part(j) - i - 1;
    }
    return out;
}

std::vector<Hook> eHooks(const Partition& lambda, int e) {
    if (e < 1) throw std::invalid_argument("eHooks: e must be positive");
    const Partition conj = lambda.conjugate();
    std::vector<Hook> out;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            int arm = lambda.part(i) - j - 1;
            int leg = conj.part(j) - i - 1;
            if ((arm + leg + 1) % e == 0) out.push_back({i + 1, j + 1, arm, leg});
        }
    return out;
}

BigInt degree(const Partition& lambda) {
    BigInt num = factorial(lambda.size());
    for (const auto& row : hookLengths(lambda))
        for (int h : row) num /= h;
    return num;
}

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::vector<Partition> partitionsOf(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-part backtracking
    std::function<void(int, int)> rec = [&](int rem, int maxPart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

void forEachPartitionTuple(int slots, int total,
                           const std::function<void(const std::vector<Partition>&)>& visit) {
    std::vector<std::vector<Partition>> bySize(total + 1);
    for (int s = 0; s <= total; ++s) bySize[s] = partitionsOf(s);
    std::vector<Partition> tup(slots);
    std::function<void(int, int)> rec = [&](int slot, int rem) {
        if (rem == 0) {
            visit(tup);  // remaining slots hold the empty partition
            return;
        }
        if (slot == slots) return;
        for (int s = 0; s <= rem; ++s)
            for (const Partition& q : bySize[s]) {
                tup[slot] = q;
                rec(slot + 1, rem - s);
            }
        tup[slot] = Partition();
    };
    rec(0, total);
}

BigInt countPartitionTuples(int slots, int total) {
    // Multisets of nonempty partitions with total size `total`, each placed on
    // distinct slots: falling factorial over slots divided by repetition counts.
    std::vector<Partition> pool;
    for (int s = 1; s <= total; ++s)
        for (const Partition& q : partitionsOf(s)) pool.push_back(q);
    BigInt count = 0;
    std::map<Partition, int> mult;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int rem, int chosen) {
        if (rem == 0) {
            BigInt ways = 1;
            for (int i = 0; i < chosen; ++i) ways *= slots - i;
            for (const auto& [q, m] : mult) ways /= factorial(m);
            count += ways;
            return;
        }
        if (chosen == slots) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (pool[i].size() > rem) continue;
            ++mult[pool[i]];
            rec(i, rem - pool[i].size(), chosen + 1);
            if (--mult[pool[i]] == 0) mult.erase(pool[i]);
        }
    };
    rec(0, total, 0);
    return count;
}

}  // namespace mckay
