// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "test_support.hpp"
#include "tfvs/bounds.hpp"
#include "tfvs/enumerate.hpp"
#include "tfvs/generators.hpp"
#include "tfvs/score_sequence.hpp"

using namespace tfvs;

namespace {

// Pinned limits.
constexpr double kScanSecondsLimit = 600.0;
constexpr double kLowerFamilyDirectSecondsLimit = 30.0;
constexpr std::uint64_t kScoreCapSamples = 100000;
constexpr std::uint64_t kScoreCapSeed = 20100531;
constexpr int kRandomOracleCount = 1000;
constexpr std::uint64_t kRandomOracleSeed = 900000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << " first_failure=" << what;
        ok = ok && cond;
    }
};

std::vector<std::uint32_t> out_masks(const Tournament& t) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(t.order()));
    for (int u = 1; u <= t.order(); ++u)
        for (int v = 1; v <= t.order(); ++v)
            if (u != v && t.beats(u, v)) out[static_cast<std::size_t>(u - 1)] |= 1U << (v - 1);
    return out;
}

// A tournament is transitive iff its scores are pairwise distinct.
bool transitive_mask(const std::vector<std::uint32_t>& out, std::uint32_t mask) {
    std::uint32_t seen = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const std::uint32_t bit = 1U << std::popcount(out[static_cast<std::size_t>(v)] & mask);
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

std::set<VertexSet> oracle_maximal_acyclic(const Tournament& t) {
    const int n = t.order();
    const auto out = out_masks(t);
    std::set<VertexSet> result;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (!transitive_mask(out, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask >> v & 1U) && transitive_mask(out, mask | 1U << v)) maximal = false;
        if (maximal) result.insert(testing::mask_to_set(n, mask));
    }
    return result;
}

std::vector<testing::NamedTournament> corpus(int max_n, int randoms, std::uint64_t seed) {
    auto c = testing::generator_corpus(max_n);
    for (auto& r : testing::random_corpus(randoms, 1, max_n, seed)) c.push_back(std::move(r));
    return c;
}

// All non-decreasing sequences over 0..n-1 passing Landau's inequalities.
std::vector<std::vector<int>> landau_sequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> s;
    std::function<void(int, int)> extend = [&](int lo, int sum) {
        const int k = static_cast<int>(s.size());
        if (k == n) {
            if (sum == n * (n - 1) / 2) out.push_back(s);
            return;
        }
        for (int x = lo; x < n; ++x) {
            if (sum + x < (k + 1) * k / 2) continue;
            s.push_back(x);
            extend(x, sum + x);
            s.pop_back();
        }
    };
    extend(0, 0);
    return out;
}

bool criterion1(std::ostream& log) {
    Check c;
    ScanOptions opts;
    opts.workers = std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t expected[] = {0, 1, 1, 3, 3, 7, 12, 21};
    double n7_seconds = 0;
    for (int n = 1; n <= 7; ++n) {
        const auto start = Clock::now();
        const ExtremalReport r = exact_max_count(n, opts);
        if (n == 7) n7_seconds = seconds_since(start);
        c.require(r.max_count == expected[n], "M(" + std::to_string(n) + ")=" + std::to_string(r.max_count));
        c.require(r.scanned == std::uint64_t{1} << pair_count(n), "scanned n=" + std::to_string(n));
    }
    c.require(n7_seconds < kScanSecondsLimit, "n=7 scan time");
    c.require(count_minimal_fvs(pq(st6())) == 25, "f(pq(ST_6))");
    c.require(count_minimal_fvs(pq(st7())) == 43, "f(pq(ST_7))");
    log << " M(1..7)=1,1,3,3,7,12,21 n7_seconds=" << n7_seconds << " workers=" << opts.workers << c.detail.str();
    return c.ok;
}

bool criterion2(std::ostream& log) {
    Check c;
    BigInt expected = 1;
    for (int k = 1; k <= 6; ++k) {
        expected *= 21;
        c.require(count_minimal_fvs(repeated_sum(st7(), k)) == expected, "21^" + std::to_string(k));
    }
    const auto start = Clock::now();
    std::uint64_t direct = 0;
    for_each_maximal_acyclic(repeated_sum(st7(), 2), [&](const VertexSet&) { ++direct; });
    const double secs = seconds_since(start);
    c.require(direct == 441, "direct k=2");
    c.require(secs < kLowerFamilyDirectSecondsLimit, "direct k=2 time");
    log << " k=1..6 direct_k2=" << direct << " seconds=" << secs << c.detail.str();
    return c.ok;
}

bool criterion3(std::ostream& log) {
    Check c;
    for (int n = 3; n <= 6; ++n)
        c.require(exact_min_count_strong(n) == 3, "m*(" + std::to_string(n) + ")");
    for (int n = 3; n <= 40; ++n) {
        const Tournament t = u_family(n);
        c.require(count_minimal_fvs(t) == 3, "f(U_" + std::to_string(n) + ")");
        std::set<VertexSet> got;
        for (const VertexSet& s : enumerate_minimal_fvs(t)) got.insert(s);
        std::set<VertexSet> expected;
        if (n == 3) {
            // U_3 is the cyclic triangle: the three sets degenerate to singletons.
            expected = {VertexSet(3, {1}), VertexSet(3, {2}), VertexSet(3, {3})};
        } else {
            VertexSet middle(n);
            for (int v = 2; v <= n - 2; ++v) middle.insert(v);
            expected = {VertexSet(n, {u_family_u1(n), u_family_u2(n)}), VertexSet(n, {1}), middle};
        }
        c.require(got == expected, "sets of U_" + std::to_string(n));
    }
    log << " m*(3..6)=3 U_3..U_40" << c.detail.str();
    return c.ok;
}

bool criterion4(std::ostream& log) {
    Check c;
    const auto instances = corpus(12, kRandomOracleCount, kRandomOracleSeed);
    std::size_t random_count = 0;
    for (const auto& [name, t] : instances) {
        if (name.rfind("random", 0) == 0) ++random_count;
        const auto expected = oracle_maximal_acyclic(t);
        const auto got = enumerate_maximal_acyclic(t);
        const std::set<VertexSet> unique(got.begin(), got.end());
        c.require(unique.size() == got.size(), "duplicates on " + name);
        c.require(unique == expected, "set mismatch on " + name);
    }
    c.require(random_count >= 1000, "random count");
    log << " instances=" << instances.size() << " random=" << random_count << c.detail.str();
    return c.ok;
}

bool criterion5(std::ostream& log) {
    Check c;
    std::uint64_t worst_delay = 0;
    std::uint64_t worst_space = 0;
    const auto instances = corpus(16, 400, 700000);
    for (const auto& [name, t] : instances) {
        const std::uint64_t n = static_cast<std::uint64_t>(t.order());
        const DelayProfile p = delay_profile(t);
        const std::uint64_t delay = std::max(p.stats.max_edges_between_outputs, p.stats.trailing_edges);
        c.require(delay <= 2 * n, "delay on " + name);
        c.require(p.stats.peak_resident_labels <= (n + 1) * (n / 2 + 2), "space on " + name);
        worst_delay = std::max(worst_delay, delay);
        worst_space = std::max(worst_space, p.stats.peak_resident_labels);
    }
    log << " instances=" << instances.size() << " max_delay=" << worst_delay << " max_labels=" << worst_space
        << c.detail.str();
    return c.ok;
}

bool criterion6(std::ostream& log) {
    Check c;
    for (int n = 11; n <= 13; ++n) {
        const SigmaReport r = sigma_report(n, kBeta);
        c.require(r.maximizes && r.unique_argmax, "sigma(" + std::to_string(n) + ")");
    }
    double worst_ratio = 0;
    for (int n = 11; n <= 200; ++n) {
        const double ratio = upper_bound_envelope(n, kBeta) / std::pow(kBeta, n);
        worst_ratio = std::max(worst_ratio, ratio);
        c.require(ratio <= 1.0, "envelope n=" + std::to_string(n));
    }
    std::uint64_t violations = 0;
    for (int n = 8; n <= 16; ++n) {
        const ScoreCapCampaign r = score_cap_campaign(n, kScoreCapSamples, kScoreCapSeed + static_cast<std::uint64_t>(n));
        c.require(r.strong_samples >= kScoreCapSamples, "samples n=" + std::to_string(n));
        violations += r.violations;
    }
    c.require(violations == 0, "score cap violations");
    log << " beta=" << kBeta << " max_envelope_ratio=" << worst_ratio << " cap_samples_per_n=" << kScoreCapSamples
        << " violations=" << violations << c.detail.str();
    return c.ok;
}

bool criterion7(std::ostream& log) {
    Check c;
    const auto instances = corpus(16, 300, 800000);
    for (const auto& [name, t] : instances) {
        const BigInt f = count_minimal_fvs(t);
        c.require(f == count_minimal_fvs(reverse(t)), "reversal on " + name);
        c.require(f == count_maximal_acyclic_direct(t), "factorized vs direct on " + name);
    }
    std::size_t sequences = 0;
    for (int n = 1; n <= 9; ++n) {
        for (const auto& s : landau_sequences(n)) {
            ++sequences;
            const ScoreSequence seq(s);
            c.require(score_sequence(realize_score_sequence(seq)) == seq, "realize n=" + std::to_string(n));
        }
    }
    log << " instances=" << instances.size() << " landau_sequences=" << sequences << c.detail.str();
    return c.ok;
}

bool criterion8(std::ostream& log) {
    Check c;
    const auto instances = corpus(12, 300, 600000);
    for (const auto& [name, t] : instances) {
        const VertexSet f = min_fvs(t);
        c.require(static_cast<int>(f.size()) == testing::brute_force_min_fvs_size(t), "size on " + name);
        c.require(is_acyclic_subset(t, f.complement()), "acyclic complement on " + name);
    }
    c.require(min_fvs(st7()).size() == 4, "|min_fvs(ST_7)|");
    log << " instances=" << instances.size() << c.detail.str();
    return c.ok;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>> criteria = {
        {"1 table1", criterion1},          {"2 lower-family", criterion2}, {"3 mstar", criterion3},
        {"4 enumerator-oracle", criterion4}, {"5 delay-space", criterion5},  {"6 upper-bound", criterion6},
        {"7 identities", criterion7},      {"8 min-fvs", criterion8},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = run(detail);
        } catch (const std::exception& e) {
            detail << " exception=" << e.what();
        }
        if (!ok) ++failed;
        std::cout << (ok ? "PASS " : "FAIL ") << name << detail.str() << std::endl;
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
