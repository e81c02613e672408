#include "tfvs/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "tfvs/generators.hpp"

namespace tfvs {

namespace {

struct ChunkResult {
    std::uint64_t scanned = 0;
    std::uint64_t strong = 0;
    std::uint64_t max_count = 0;
    std::uint64_t max_pattern = 0;
    std::set<ScoreSequence> max_scores;
    std::uint64_t min_strong = 0;
    std::uint64_t min_pattern = 0;
};

void absorb(ChunkResult& into, const ChunkResult& from) {
    into.scanned += from.scanned;
    into.strong += from.strong;
    if (from.scanned > 0) {
        if (from.max_count > into.max_count) {
            into.max_count = from.max_count;
            into.max_pattern = from.max_pattern;
            into.max_scores = from.max_scores;
        } else if (from.max_count == into.max_count) {
            into.max_pattern = std::min(into.max_pattern, from.max_pattern);
            into.max_scores.insert(from.max_scores.begin(), from.max_scores.end());
        }
    }
    if (from.strong > 0) {
        if (into.min_strong == 0 || from.min_strong < into.min_strong ||
            (from.min_strong == into.min_strong && from.min_pattern < into.min_pattern)) {
            into.min_strong = from.min_strong;
            into.min_pattern = from.min_pattern;
        }
    }
}

ChunkResult scan_range(int n, std::uint64_t begin, std::uint64_t end) {
    ChunkResult r;
    for (std::uint64_t pattern = begin; pattern < end; ++pattern) {
        const Tournament t = from_arc_pattern(n, pattern);
        const std::uint64_t f = count_maximal_acyclic_direct(t);
        ++r.scanned;
        if (f > r.max_count) {
            r.max_count = f;
            r.max_pattern = pattern;
            r.max_scores = {score_sequence(t)};
        } else if (f == r.max_count) {
            r.max_scores.insert(score_sequence(t));
        }
        if (is_strong(t)) {
            ++r.strong;
            if (r.min_strong == 0 || f < r.min_strong) {
                r.min_strong = f;
                r.min_pattern = pattern;
            }
        }
    }
    return r;
}

std::string format_scores(const std::set<ScoreSequence>& scores) {
    std::string out;
    for (const ScoreSequence& s : scores) {
        if (!out.empty()) out += ';';
        for (int i = 0; i < s.length(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out.empty() ? "-" : out;
}

std::set<ScoreSequence> parse_scores(const std::string& text) {
    std::set<ScoreSequence> out;
    if (text == "-") return out;
    std::istringstream seqs(text);
    std::string seq;
    while (std::getline(seqs, seq, ';')) {
        std::vector<int> values;
        std::istringstream items(seq);
        std::string item;
        while (std::getline(items, item, ',')) values.push_back(std::stoi(item));
        out.insert(ScoreSequence(std::move(values)));
    }
    return out;
}

std::string checkpoint_line(int n, std::uint64_t begin, std::uint64_t end, const ChunkResult& r) {
    std::ostringstream os;
    os << "chunk n=" << n << " begin=" << begin << " end=" << end << " scanned=" << r.scanned << " strong=" << r.strong
       << " max=" << r.max_count << " maxpat=" << r.max_pattern << " minstrong=" << r.min_strong
       << " minpat=" << r.min_pattern << " scores=" << format_scores(r.max_scores);
    return os.str();
}

/// Completed chunks from a checkpoint file, keyed by chunk begin.
std::map<std::uint64_t, ChunkResult> read_checkpoint(const std::filesystem::path& path, int n, std::uint64_t chunk) {
    std::map<std::uint64_t, ChunkResult> done;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag) || tag != "chunk") continue;
        std::map<std::string, std::string> kv;
        std::string field;
        while (is >> field) {
            const auto eq = field.find('=');
            if (eq != std::string::npos) kv[field.substr(0, eq)] = field.substr(eq + 1);
        }
        try {
            if (std::stoi(kv.at("n")) != n) continue;
            const std::uint64_t begin = std::stoull(kv.at("begin"));
            if (begin % chunk != 0) continue;
            ChunkResult r;
            r.scanned = std::stoull(kv.at("scanned"));
            r.strong = std::stoull(kv.at("strong"));
            r.max_count = std::stoull(kv.at("max"));
            r.max_pattern = std::stoull(kv.at("maxpat"));
            r.min_strong = std::stoull(kv.at("minstrong"));
            r.min_pattern = std::stoull(kv.at("minpat"));
            r.max_scores = parse_scores(kv.at("scores"));
            done[begin] = std::move(r);
        } catch (const std::exception&) {
            // Torn or foreign line; the chunk is simply rescanned.
        }
    }
    return done;
}

}  // namespace

ExtremalReport exhaustive_scan(int n, const ScanOptions& options) {
    if (n < 1) throw TournamentError("exhaustive scan needs n >= 1");
    if (n > 8) throw TournamentError("exhaustive scan is limited to n <= 8");
    if (n == 8 && !options.allow_long_run)
        throw TournamentError("n = 8 scans 2^28 tournaments; pass the long-run override to proceed");

    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;

    std::map<std::uint64_t, ChunkResult> resumed;
    if (!options.checkpoint.empty()) resumed = read_checkpoint(options.checkpoint, n, chunk);

    std::vector<std::optional<ChunkResult>> results(chunks);
    std::uint64_t chunks_resumed = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        if (auto it = resumed.find(c * chunk); it != resumed.end()) {
            results[c] = it->second;
            ++chunks_resumed;
        }
    }

    std::ofstream checkpoint;
    if (!options.checkpoint.empty()) checkpoint.open(options.checkpoint, std::ios::app);
    std::mutex checkpoint_mutex;
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            if (results[c]) continue;
            const std::uint64_t begin = c * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            ChunkResult r = scan_range(n, begin, end);
            if (checkpoint.is_open()) {
                std::lock_guard lock(checkpoint_mutex);
                checkpoint << checkpoint_line(n, begin, end, r) << '\n' << std::flush;
            }
            results[c] = std::move(r);
        }
    };
    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }

    ChunkResult all;
    for (const auto& r : results) absorb(all, *r);

    ExtremalReport report;
    report.n = n;
    report.max_count = all.max_count;
    report.witness_pattern = all.max_pattern;
    report.witness = from_arc_pattern(n, all.max_pattern);
    report.witness_scores = std::move(all.max_scores);
    report.min_strong_count = all.min_strong;
    report.min_strong_pattern = all.min_pattern;
    report.scanned = all.scanned;
    report.strong_scanned = all.strong;
    report.chunks_resumed = chunks_resumed;
    return report;
}

ExtremalReport exact_max_count(int n, const ScanOptions& options) {
    if (n > 7 && !options.allow_long_run) throw TournamentError("exact_max_count is limited to n <= 7 without the long-run override");
    return exhaustive_scan(n, options);
}

std::uint64_t exact_min_count_strong(int n, const ScanOptions& options) {
    if (n < 3) throw TournamentError("strong tournaments with a cycle need n >= 3");
    if (n > 6 && !options.allow_long_run) throw TournamentError("exact_min_count_strong is limited to n <= 6 without the long-run override");
    return exhaustive_scan(n, options).min_strong_count;
}

LowerFamilyReport lower_bound_family(int k) {
    if (k < 1) throw TournamentError("lower bound family needs k >= 1");
    LowerFamilyReport r;
    r.k = k;
    r.expected = boost::multiprecision::pow(BigInt(21), static_cast<unsigned>(k));
    const Tournament t = repeated_sum(st7(), k);
    r.factorized = count_minimal_fvs(t);
    r.ok = r.factorized == r.expected;
    if (k <= 2) {
        r.direct_checked = true;
        r.direct = count_maximal_acyclic_direct(t);
        r.ok = r.ok && BigInt(r.direct) == r.expected;
    }
    return r;
}

bool verify_lower_bound_family(int k) { return lower_bound_family(k).ok; }

bool check_score_cap(const Tournament& t, int k) {
    if (k < 0 || k > 2) throw TournamentError("score cap is stated for k in {0, 1, 2}");
    if (t.order() < 8)
        throw TournamentError("score cap needs n >= 8; known strong exceptions below 8: C_3 (k=0), RT_5 and ST_6 (k=1), ST_7 (k=2)");
    if (!is_strong(t)) throw TournamentError("score cap applies to strong tournaments only");
    const int n = t.order();
    int high = 0;
    for (int v = 1; v <= n; ++v)
        if (t.score(v) >= n - 2 - k) ++high;
    return high <= 2 * (k + 1);
}

ScoreCapCampaign score_cap_campaign(int n, std::uint64_t strong_samples, std::uint64_t seed) {
    ScoreCapCampaign c;
    c.n = n;
    c.seed = seed;
    std::mt19937_64 seeds(seed);
    while (c.strong_samples < strong_samples) {
        const Tournament t = random_tournament(n, seeds());
        if (!is_strong(t)) {
            ++c.rejected_non_strong;
            continue;
        }
        ++c.strong_samples;
        for (int k = 0; k <= 2; ++k)
            if (!check_score_cap(t, k)) ++c.violations;
    }
    return c;
}

MStarCampaign mstar_floor_campaign(int n, std::uint64_t samples, std::uint64_t seed) {
    MStarCampaign c;
    c.n = n;
    std::mt19937_64 seeds(seed);
    while (c.samples < samples) {
        const Tournament t = random_tournament(n, seeds());
        if (!is_strong(t)) continue;
        ++c.samples;
        const std::uint64_t f = count_maximal_acyclic_direct(t);
        if (c.min_count == 0 || f < c.min_count) c.min_count = f;
    }
    return c;
}

double g_value(const ScoreSequence& s, double beta) {
    double total = 0;
    for (int x : s) total += std::pow(beta, x);
    return total;
}

ScoreSequence sigma(int n) {
    if (n < 11) throw TournamentError("sigma(n) is defined for n >= 11");
    switch (n) {
        case 11: return ScoreSequence({3, 3, 3, 3, 3, 5, 7, 7, 7, 7, 7});
        case 12: return ScoreSequence({3, 3, 3, 3, 3, 3, 8, 8, 8, 8, 8, 8});
        case 13: return ScoreSequence({3, 3, 3, 3, 3, 3, 6, 9, 9, 9, 9, 9, 9});
        default: break;
    }
    std::vector<int> s(6, 3);
    s.push_back(4);
    for (int c = 7; c <= n - 8; ++c) s.push_back(c);
    s.push_back(n - 5);
    s.insert(s.end(), 6, n - 4);
    return ScoreSequence(std::move(s));
}

bool in_capped_domain(const ScoreSequence& s) {
    const int n = s.length();
    return n >= 1 && s[0] >= 3 && s[n - 1] <= n - 4 && landau_feasible(s, true);
}

SigmaReport sigma_report(int n, double beta) {
    SigmaReport r;
    r.n = n;
    r.beta = beta;
    const ScoreSequence target = sigma(n);
    r.sigma_value = g_value(target, beta);
    r.sigma_in_domain = in_capped_domain(target);

    const int lo = 3;
    const int hi = n - 4;
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::vector<std::pair<double, ScoreSequence>> all_top;
    bool maximizes = true;
    bool unique = true;

    std::function<void(int, int, long long)> walk = [&](int pos, int min_value, long long prefix) {
        if (pos == n) {
            if (prefix != total) return;
            ScoreSequence s(seq);
            ++r.sequences;
            const double g = g_value(s, beta);
            if (g > r.sigma_value * (1 + kRelativeSlack)) maximizes = false;
            if (s != target && g >= r.sigma_value * (1 - kRelativeSlack)) unique = false;
            all_top.emplace_back(g, std::move(s));
            std::sort(all_top.begin(), all_top.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
            if (all_top.size() > 5) all_top.pop_back();
            return;
        }
        const int k = pos + 1;
        for (int value = min_value; value <= hi; ++value) {
            const long long p = prefix + value;
            if (k < n && p < static_cast<long long>(k) * (k - 1) / 2 + 1) continue;
            // Remaining entries are at most hi and at least value.
            if (p + static_cast<long long>(n - k) * hi < total) continue;
            if (p + static_cast<long long>(n - k) * value > total) break;
            seq[pos] = value;
            walk(pos + 1, value, p);
        }
    };
    walk(0, lo, 0);
    r.maximizes = maximizes && r.sigma_in_domain;
    r.unique_argmax = unique && r.sigma_in_domain;
    r.top = std::move(all_top);
    return r;
}

bool verify_sigma_maximizes(int n, double beta) {
    const SigmaReport r = sigma_report(n, beta);
    return r.maximizes && r.unique_argmax;
}

double upper_bound_envelope(int n, double beta) {
    auto b = [beta](int e) { return std::pow(beta, e); };
    switch (n) {
        case 11: return 5 * b(3) + b(5) + 5 * b(7);
        case 12: return 6 * b(3) + 6 * b(8);
        case 13: return 6 * b(3) + b(6) + 6 * b(9);
        default: break;
    }
    if (n < 11) throw TournamentError("the envelope is defined for n >= 11");
    return b(n - 7) / (beta - 1) + b(n - 5) + 6 * b(n - 4);
}

std::vector<ScoreSequence> feasible_score_sequences(int n, bool strong) {
    std::vector<ScoreSequence> out;
    if (n < 1) return out;
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::function<void(int, int, long long)> walk = [&](int pos, int min_value, long long prefix) {
        if (pos == n) {
            if (prefix == total) out.emplace_back(seq);
            return;
        }
        const int k = pos + 1;
        for (int value = min_value; value <= n - 1; ++value) {
            const long long p = prefix + value;
            const long long need = static_cast<long long>(k) * (k - 1) / 2 + (strong && k < n ? 1 : 0);
            if (p < need) continue;
            if (p + static_cast<long long>(n - k) * value > total) break;
            seq[pos] = value;
            walk(pos + 1, value, p);
        }
    };
    walk(0, 0, 0);
    return out;
}

}  // namespace tfvs
