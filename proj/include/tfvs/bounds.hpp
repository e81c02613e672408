#ifndef TFVS_BOUNDS_HPP_
#define TFVS_BOUNDS_HPP_

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tfvs/enumerate.hpp"
#include "tfvs/score_sequence.hpp"

namespace tfvs {

/// Base of the exponential upper bound on the number of minimal FVSs.
inline constexpr double kBeta = 1.6740;
/// Relative slack for comparisons of G values.
inline constexpr double kRelativeSlack = 1e-9;

struct ScanOptions {
    unsigned workers = 1;
    std::uint64_t chunk_size = std::uint64_t{1} << 15;
    /// When set, one line is appended per completed chunk; existing lines are
    /// read back first and their chunks skipped.
    std::filesystem::path checkpoint;
    /// Required for n = 8 (2^28 tournaments).
    bool allow_long_run = false;
};

/// Result of an exhaustive scan over all labelled tournaments on n vertices
/// (arc patterns 0 .. 2^C(n,2)-1, see from_arc_pattern).
struct ExtremalReport {
    int n = 0;
    std::uint64_t max_count = 0;
    std::uint64_t witness_pattern = 0;  ///< smallest pattern attaining max_count
    Tournament witness;
    std::set<ScoreSequence> witness_scores;  ///< score sequences of all maximisers
    std::uint64_t min_strong_count = 0;      ///< 0 when no strong tournament exists
    std::uint64_t min_strong_pattern = 0;
    std::uint64_t scanned = 0;
    std::uint64_t strong_scanned = 0;
    std::uint64_t chunks_resumed = 0;
};

ExtremalReport exhaustive_scan(int n, const ScanOptions& options = {});

/// M(n) by exhaustive scan. Throws TournamentError for n > 7 unless
/// options.allow_long_run (then n <= 8).
ExtremalReport exact_max_count(int n, const ScanOptions& options = {});
/// m*(n): minimum f over strong tournaments, for 3 <= n <= 6.
std::uint64_t exact_min_count_strong(int n, const ScanOptions& options = {});

struct LowerFamilyReport {
    int k = 0;
    BigInt expected;
    BigInt factorized;
    bool direct_checked = false;
    std::uint64_t direct = 0;
    bool ok = false;
};

/// k-fold sum of ST_7 has 21^k minimal FVSs; k <= 2 also counted directly.
LowerFamilyReport lower_bound_family(int k);
bool verify_lower_bound_family(int k);

/// At most 2(k+1) vertices of score >= n-2-k. Requires T strong and n >= 8;
/// otherwise throws TournamentError whose message lists the known small
/// exceptions.
bool check_score_cap(const Tournament& t, int k);

struct ScoreCapCampaign {
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t strong_samples = 0;
    std::uint64_t rejected_non_strong = 0;
    std::uint64_t violations = 0;
};

/// Samples random tournaments (seeds drawn from std::mt19937_64(seed)),
/// discards non-strong ones, and checks the cap for k = 0, 1, 2 until
/// `strong_samples` strong tournaments have been tested.
ScoreCapCampaign score_cap_campaign(int n, std::uint64_t strong_samples, std::uint64_t seed);

struct MStarCampaign {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t min_count = 0;
};

/// Minimum f over `samples` random strong tournaments on n vertices.
MStarCampaign mstar_floor_campaign(int n, std::uint64_t samples, std::uint64_t seed);

/// Sum of beta^s over the sequence.
double g_value(const ScoreSequence& s, double beta = kBeta);

/// The maximiser of G over strong score sequences with 3 <= s_v <= n-4.
/// Throws TournamentError for n < 11.
ScoreSequence sigma(int n);

/// Whether s satisfies the strict Landau conditions and 3 <= s_1, s_n <= n-4.
bool in_capped_domain(const ScoreSequence& s);

struct SigmaReport {
    int n = 0;
    double beta = kBeta;
    std::uint64_t sequences = 0;
    double sigma_value = 0;
    bool sigma_in_domain = false;
    bool maximizes = false;     ///< G(s) <= G(sigma) (1 + slack) for all s
    bool unique_argmax = false; ///< no other s within slack of G(sigma)
    std::vector<std::pair<double, ScoreSequence>> top;  ///< five largest G values
};

SigmaReport sigma_report(int n, double beta = kBeta);
bool verify_sigma_maximizes(int n, double beta = kBeta);

/// Closed-form bound on G(sigma(n)): exact for n = 11, 12, 13 and the
/// geometric-sum bound beta^(n-7)/(beta-1) + beta^(n-5) + 6 beta^(n-4) for
/// n >= 14.
double upper_bound_envelope(int n, double beta = kBeta);

/// Every non-decreasing sequence of length n satisfying Landau's conditions
/// (strict form when `strong`).
std::vector<ScoreSequence> feasible_score_sequences(int n, bool strong);

}  // namespace tfvs

#endif  // TFVS_BOUNDS_HPP_
