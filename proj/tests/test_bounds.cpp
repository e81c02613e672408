#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "tfvs/bounds.hpp"
#include "tfvs/generators.hpp"

using namespace tfvs;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("exact_max_count small n") {
    const std::uint64_t expected[] = {0, 1, 1, 3, 3, 7, 12};
    for (int n = 1; n <= 6; ++n) {
        const ExtremalReport r = exact_max_count(n);
        CHECK(r.max_count == expected[n]);
        CHECK(r.scanned == (std::uint64_t{1} << pair_count(n)));
        CHECK(count_maximal_acyclic_direct(r.witness) == r.max_count);
    }
    const ExtremalReport five = exact_max_count(5);
    // Every maximiser at n=5 has the scores of pq(C_3); the regular tournament has f=5.
    CHECK(five.witness_scores == std::set<ScoreSequence>{score_sequence(pq(c3()))});
    CHECK(count_minimal_fvs(five.witness) == count_minimal_fvs(pq(c3())));
    const ExtremalReport six = exact_max_count(6);
    CHECK(six.witness_scores == std::set<ScoreSequence>{score_sequence(st6())});
    CHECK(is_strong(six.witness));

    CHECK_THROWS_AS(exact_max_count(8), TournamentError);
    ScanOptions long_run;
    long_run.allow_long_run = true;
    CHECK_THROWS_AS(exact_max_count(9, long_run), TournamentError);
}

TEST_CASE("M is non-decreasing on exhaustive data") {
    std::uint64_t prev = 1;
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t m = exact_max_count(n).max_count;
        CHECK(m >= prev);
        prev = m;
    }
}

TEST_CASE("exact_min_count_strong") {
    for (int n = 3; n <= 5; ++n) CHECK(exact_min_count_strong(n) == 3);
    CHECK_THROWS_AS(exact_min_count_strong(2), TournamentError);
    CHECK_THROWS_AS(exact_min_count_strong(7), TournamentError);
}

TEST_CASE("parallel scan and checkpoint resume") {
    ScanOptions opts;
    opts.chunk_size = 64;
    opts.workers = 3;
    opts.checkpoint = temp_file("tfvs_scan_checkpoint.txt");
    const ExtremalReport first = exhaustive_scan(5, opts);
    CHECK(first.max_count == 7);
    CHECK(first.chunks_resumed == 0);

    const ExtremalReport resumed = exhaustive_scan(5, opts);
    CHECK(resumed.chunks_resumed == 16);
    CHECK(resumed.max_count == first.max_count);
    CHECK(resumed.witness_pattern == first.witness_pattern);
    CHECK(resumed.witness_scores == first.witness_scores);
    CHECK(resumed.min_strong_count == 3);

    // Keep only half of the chunk lines, plus a torn one.
    std::ifstream in(opts.checkpoint);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    in.close();
    std::ofstream out(opts.checkpoint, std::ios::trunc);
    for (std::size_t i = 0; i < lines.size(); i += 2) out << lines[i] << '\n';
    out << "chunk n=5 begin=64 end=";
    out.close();
    const ExtremalReport partial = exhaustive_scan(5, opts);
    CHECK(partial.chunks_resumed == 8);
    CHECK(partial.scanned == 1024);
    CHECK(partial.witness_pattern == first.witness_pattern);
    CHECK(partial.witness_scores == first.witness_scores);
    std::filesystem::remove(opts.checkpoint);
}

TEST_CASE("lower bound family") {
    for (int k = 1; k <= 3; ++k) CHECK(verify_lower_bound_family(k));
    const LowerFamilyReport two = lower_bound_family(2);
    CHECK(two.direct_checked);
    CHECK(two.direct == 441);
    CHECK(lower_bound_family(3).factorized == 9261);
}

TEST_CASE("check_score_cap") {
    const Tournament st8 = pq(st6());
    CHECK(st8.order() == 8);
    for (int k = 0; k <= 2; ++k) CHECK(check_score_cap(st8, k));
    try {
        check_score_cap(rt5(), 1);
        FAIL("expected rejection");
    } catch (const TournamentError& e) {
        CHECK(std::string(e.what()).find("RT_5") != std::string::npos);
    }
    CHECK_THROWS_AS(check_score_cap(transitive(9), 0), TournamentError);
    CHECK_THROWS_AS(check_score_cap(st8, 3), TournamentError);

    // Six vertices of score >= n-3 in a strong 8-tournament would break the cap;
    // the campaign never finds one.
    const ScoreCapCampaign c = score_cap_campaign(10, 2000, 5);
    CHECK(c.strong_samples == 2000);
    CHECK(c.violations == 0);
}

TEST_CASE("g_value") {
    const double b = kBeta;
    CHECK(g_value(sigma(11)) == doctest::Approx(5 * std::pow(b, 3) + std::pow(b, 5) + 5 * std::pow(b, 7)).epsilon(1e-12));
    CHECK(g_value(sigma(12)) == doctest::Approx(6 * std::pow(b, 3) + 6 * std::pow(b, 8)).epsilon(1e-12));
    CHECK(g_value(ScoreSequence(std::vector<int>(9, 0))) == 9.0);
    CHECK(g_value(ScoreSequence({1, 1, 1}), 2.0) == 6.0);
}

TEST_CASE("sigma") {
    CHECK(sigma(11).values() == std::vector<int>{3, 3, 3, 3, 3, 5, 7, 7, 7, 7, 7});
    CHECK(sigma(13).values() == std::vector<int>{3, 3, 3, 3, 3, 3, 6, 9, 9, 9, 9, 9, 9});
    CHECK(sigma(14).length() == 14);
    CHECK(sigma(14).sum() == 91);
    CHECK(sigma(16).values() == std::vector<int>{3, 3, 3, 3, 3, 3, 4, 7, 8, 11, 12, 12, 12, 12, 12, 12});
    for (int n = 11; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(sigma(n).length() == n);
        CHECK(in_capped_domain(sigma(n)));
    }
    CHECK_THROWS_AS(sigma(10), TournamentError);
}

TEST_CASE("sigma maximizes G on the capped domain") {
    for (int n = 11; n <= 13; ++n) {
        CAPTURE(n);
        const SigmaReport r = sigma_report(n);
        CHECK(r.maximizes);
        CHECK(r.unique_argmax);
        CHECK(r.top.front().second == sigma(n));
        CHECK(r.top.size() == std::min<std::size_t>(5, r.sequences));
    }
}

TEST_CASE("upper bound envelope") {
    CHECK(upper_bound_envelope(11) == doctest::Approx(g_value(sigma(11))).epsilon(1e-12));
    CHECK(upper_bound_envelope(12) == doctest::Approx(g_value(sigma(12))).epsilon(1e-12));
    CHECK(upper_bound_envelope(13) == doctest::Approx(g_value(sigma(13))).epsilon(1e-12));
    for (int n = 14; n <= 80; ++n) CHECK(upper_bound_envelope(n) * (1 + kRelativeSlack) >= g_value(sigma(n)));
    for (int n = 11; n <= 200; ++n) CHECK(upper_bound_envelope(n) / std::pow(kBeta, n) <= 1.0);
    CHECK_THROWS_AS(upper_bound_envelope(10), TournamentError);
}

TEST_CASE("feasible score sequences match exhaustive tournaments") {
    for (int n = 1; n <= 6; ++n) {
        std::set<ScoreSequence> seen;
        std::set<ScoreSequence> seen_strong;
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << pair_count(n)); ++p) {
            const Tournament t = from_arc_pattern(n, p);
            seen.insert(score_sequence(t));
            if (is_strong(t)) seen_strong.insert(score_sequence(t));
        }
        const auto all = feasible_score_sequences(n, false);
        const auto strong = feasible_score_sequences(n, true);
        CHECK(std::set<ScoreSequence>(all.begin(), all.end()) == seen);
        CHECK(std::set<ScoreSequence>(strong.begin(), strong.end()) == seen_strong);
    }
}

TEST_CASE("m* floor on sampled strong tournaments") {
    for (int n = 7; n <= 12; ++n) CHECK(mstar_floor_campaign(n, 40, 17).min_count >= 3);
}

TEST_SUITE_END();
