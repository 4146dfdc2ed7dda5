// Command-line surface over the library: abacus decompositions, p'-degree
// enumerations, normalizer labels, restriction multiplicities, bijections and
// the verification suite. Exit status: 0 all good, 1 a check failed (witness
// on stdout), 2 invalid input.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mckay/abacus.hpp"
#include "mckay/bijection.hpp"
#include "mckay/lr.hpp"
#include "mckay/normalizer.hpp"
#include "mckay/partition.hpp"
#include "mckay/sylow.hpp"
#include "mckay/sym_char.hpp"
#include "mckay/verify.hpp"

namespace {

using mckay::Partition;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// accepts "7,5,3" and the JSON form "[7,5,3]"
Partition parsePartition(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '[' && c != ']' && c != ' ') s.push_back(c);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InvalidInput("malformed partition: " + s);
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("malformed partition: ") + e.what());
    }
}

bool isPrime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void requirePrime(int p) {
    if (!isPrime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
}

std::vector<int> parsePrimes(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int p;
        try {
            p = std::stoi(tok);
        } catch (const std::exception&) {
            throw InvalidInput("malformed prime list: " + s);
        }
        requirePrime(p);
        out.push_back(p);
    }
    if (out.empty()) throw InvalidInput("empty prime list");
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Content-addressed result cache under $MCKAY_CACHE_DIR (if set). Writes go
// to a temp file first and are renamed into place, so readers never see a
// partial entry.
std::optional<std::filesystem::path> cachePath(const std::string& key) {
    const char* dir = std::getenv("MCKAY_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::ostringstream name;
    name << std::hex << fnv1a(key) << ".json";
    return std::filesystem::path(dir) / name.str();
}

std::string runCached(const std::string& key, const std::function<std::string()>& produce) {
    const auto path = cachePath(key);
    if (path && std::filesystem::exists(*path)) {
        std::ifstream in(*path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::string out = produce();
    if (path) {
        std::filesystem::create_directories(path->parent_path());
        std::filesystem::path tmpPath = *path;
        tmpPath += ".tmp";
        {
            std::ofstream o(tmpPath, std::ios::trunc);
            o << out;
        }
        std::filesystem::rename(tmpPath, *path);
    }
    return out;
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(outPath, std::ios::trunc);
        o << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p'-degree character combinatorics of symmetric groups and Sylow p-normalizers"};
    app.require_subcommand(1);

    int p = 5, k = 1, n = 0, nMax = 40, sampleSize = 100, x = 0;
    long long cap = 1'000'000;
    std::uint64_t seed = 0;
    std::string partitionArg, outerArg, muArg, gammaArg, primesArg = "2,3,5,7,11,13";
    std::string outPath, format = "json", strategyArg = "recursive";

    auto* coreCmd = app.add_subcommand("core", "core and quotient of a partition on the p^k-abacus");
    coreCmd->add_option("--p", p, "prime")->required();
    coreCmd->add_option("--k", k, "power of p to use");
    coreCmd->add_option("--partition", partitionArg, "comma-separated parts")->required();

    auto* enumCmd = app.add_subcommand("enumerate", "partitions of n with degree coprime to p");
    enumCmd->add_option("--n", n)->required();
    enumCmd->add_option("--p", p)->required();
    enumCmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    enumCmd->add_option("--out", outPath);

    auto* normCmd = app.add_subcommand("normalizer", "p'-degree labels of the Sylow p-normalizer");
    normCmd->add_option("--n", n)->required();
    normCmd->add_option("--p", p)->required();
    normCmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    normCmd->add_option("--out", outPath);

    auto* lrCmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient or all constituents");
    lrCmd->add_option("--outer", outerArg)->required();
    lrCmd->add_option("--mu", muArg);
    lrCmd->add_option("--gamma", gammaArg);
    lrCmd->add_option("--x", x, "list all constituents for the split (x, |outer|-x)");

    auto* restrictCmd = app.add_subcommand("restrict", "multiplicity of the star linear character");
    restrictCmd->add_option("--p", p)->required();
    restrictCmd->add_option("--k", k);
    restrictCmd->add_option("--lambda", partitionArg, "one partition of p^k; all of them if omitted");
    restrictCmd->add_option("--cap", cap);
    restrictCmd->add_option("--out", outPath);

    auto* bijCmd = app.add_subcommand("bijection", "degree-dominating bijection for (n, p)");
    bijCmd->add_option("--n", n)->required();
    bijCmd->add_option("--p", p)->required();
    bijCmd->add_option("--strategy", strategyArg)->check(CLI::IsMember({"recursive", "global"}));
    bijCmd->add_option("--out", outPath);

    auto* verifyCmd = app.add_subcommand("verify", "full check suite plus a bijection sweep");
    verifyCmd->add_option("--n-max", nMax)->check(CLI::Range(0, 120));
    verifyCmd->add_option("--primes", primesArg);
    verifyCmd->add_option("--seed", seed);
    verifyCmd->add_option("--cap", cap);
    verifyCmd->add_option("--sample", sampleSize);
    verifyCmd->add_option("--out", outPath);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (coreCmd->parsed()) {
            requirePrime(p);
            const Partition lambda = parsePartition(partitionArg);
            int pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            const auto cq = mckay::coreQuotient(lambda, pk);
            nlohmann::json j;
            j["partition"] = lambda.parts();
            j["r"] = pk;
            j["core"] = cq.core.parts();
            j["quotient"] = nlohmann::json::array();
            for (const Partition& q : cq.quotient) j["quotient"].push_back(q.parts());
            j["quotientSize"] = cq.quotientSize;
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (enumCmd->parsed()) {
            requirePrime(p);
            const std::string key = "enumerate|" + std::to_string(n) + "|" + std::to_string(p) + "|" + format;
            emit(runCached(key,
                           [&] {
                               std::ostringstream os;
                               for (const Partition& lambda : mckay::enumeratePPrime(n, p)) {
                                   if (format == "csv") {
                                       os << n << ',' << p << ",S," << lambda.str() << ','
                                          << mckay::degree(lambda).get_str() << "\n";
                                   } else {
                                       nlohmann::json j;
                                       j["lambda"] = lambda.parts();
                                       j["degree"] = mckay::degree(lambda).get_str();
                                       os << j.dump() << "\n";
                                   }
                               }
                               return os.str();
                           }),
                 outPath);
            return 0;
        }

        if (normCmd->parsed()) {
            requirePrime(p);
            const std::string key = "normalizer|" + std::to_string(n) + "|" + std::to_string(p) + "|" + format;
            emit(runCached(key,
                           [&] {
                               std::ostringstream os;
                               for (const auto& label : mckay::enumNormN(n, p)) {
                                   if (format == "csv") {
                                       os << n << ',' << p << ",N,\"" << label.toJson().dump()
                                          << "\"," << label.degree().get_str() << "\n";
                                   } else {
                                       nlohmann::json j;
                                       j["label"] = label.toJson();
                                       j["degree"] = label.degree().get_str();
                                       os << j.dump() << "\n";
                                   }
                               }
                               return os.str();
                           }),
                 outPath);
            return 0;
        }

        if (lrCmd->parsed()) {
            const Partition outer = parsePartition(outerArg);
            if (x > 0) {
                for (const auto& c : mckay::restrictionConstituents(outer, x)) {
                    nlohmann::json j;
                    j["mu"] = c.mu.parts();
                    j["gamma"] = c.gamma.parts();
                    j["coeff"] = c.coeff;
                    std::cout << j.dump() << "\n";
                }
                return 0;
            }
            const Partition mu = parsePartition(muArg);
            const Partition gamma = parsePartition(gammaArg);
            if (mu.size() + gamma.size() != outer.size())
                throw InvalidInput("|mu| + |gamma| must equal |outer|");
            nlohmann::json j;
            j["coeff"] = mckay::lrCoeff(outer, mu, gamma);
            std::cout << j.dump() << "\n";
            return 0;
        }

        if (restrictCmd->parsed()) {
            requirePrime(p);
            int pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            mckay::StarRestriction sr(p, k, cap);
            const auto star = mckay::StarLabel::star(p, k);
            std::vector<Partition> lambdas;
            if (!partitionArg.empty())
                lambdas.push_back(parsePartition(partitionArg));
            else
                lambdas = mckay::partitionsOf(pk);
            std::ostringstream os;
            for (const Partition& lambda : lambdas) {
                if (lambda.size() != pk) throw InvalidInput("partition must have size p^k");
                nlohmann::json j;
                j["lambda"] = lambda.parts();
                j["s"] = "star";
                j["multiplicity"] = sr.multiplicity(lambda, star).get_str();
                os << j.dump() << "\n";
            }
            emit(os.str(), outPath);
            return 0;
        }

        if (bijCmd->parsed()) {
            requirePrime(p);
            const auto strategy = strategyArg == "global" ? mckay::Strategy::global
                                                          : mckay::Strategy::recursive;
            const std::string key = "bijection|" + std::to_string(n) + "|" + std::to_string(p) + "|" + strategyArg;
            const auto rec = mckay::buildBijection(n, p, strategy);
            const auto rep = mckay::verifyBijection(rec);
            std::ostringstream os;
            for (const auto& pr : rec.pairs) os << mckay::pairToJson(pr).dump() << "\n";
            if (!rep.pass || rec.anomaly) {
                nlohmann::json j;
                j["status"] = "fail";
                j["anomaly"] = rec.anomaly;
                j["witness"] = rep.message;
                os << j.dump() << "\n";
                emit(os.str(), outPath);
                return 1;
            }
            emit(runCached(key, [&] { return os.str(); }), outPath);
            return 0;
        }

        if (verifyCmd->parsed()) {
            const std::vector<int> primes = parsePrimes(primesArg);
            std::ostringstream os;
            bool allPass = true;
            for (const auto& result : mckay::runAll(seed)) {
                if (result.status == mckay::CheckResult::Status::fail) allPass = false;
                os << result.toJson().dump() << "\n";
            }
            bool sweepPass = true;
            for (int prime : primes)
                for (int m = 1; m <= nMax; ++m)
                    for (const auto strategy : {mckay::Strategy::recursive, mckay::Strategy::global}) {
                        const auto rec = mckay::buildBijection(m, prime, strategy);
                        const auto rep = mckay::verifyBijection(rec);
                        if (!rep.pass || rec.anomaly) {
                            sweepPass = false;
                            nlohmann::json j;
                            j["checkId"] = "bijection-sweep";
                            j["params"] = {{"n", m},
                                           {"p", prime},
                                           {"strategy",
                                            strategy == mckay::Strategy::global ? "global" : "recursive"}};
                            j["status"] = "fail";
                            j["witness"] = rep.message.empty() ? "anomaly" : rep.message;
                            os << j.dump() << "\n";
                        }
                    }
            nlohmann::json summary;
            summary["checkId"] = "bijection-sweep";
            summary["params"] = {{"nMax", nMax}, {"primes", primes}};
            summary["status"] = sweepPass ? "pass" : "fail";
            os << summary.dump() << "\n";
            emit(os.str(), outPath);
            return allPass && sweepPass ? 0 : 1;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
