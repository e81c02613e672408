#include "tfvs/score_sequence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tfvs {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace

ScoreSequence::ScoreSequence(std::vector<int> scores) : scores_(std::move(scores)) {
    const int n = length();
    for (std::size_t i = 0; i < scores_.size(); ++i) {
        if (scores_[i] < 0 || scores_[i] > std::max(0, n - 1))
            throw TournamentError("score " + std::to_string(scores_[i]) + " out of range for " + std::to_string(n) + " vertices");
        if (i > 0 && scores_[i] < scores_[i - 1]) throw TournamentError("score sequence must be non-decreasing");
    }
}

long long ScoreSequence::sum() const { return std::accumulate(scores_.begin(), scores_.end(), 0LL); }

std::ostream& operator<<(std::ostream& os, const ScoreSequence& s) {
    os << '(';
    for (int i = 0; i < s.length(); ++i) os << (i ? "," : "") << s[i];
    return os << ')';
}

ScoreSequence score_sequence(const Tournament& t) {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(t.order()));
    for (int v = 1; v <= t.order(); ++v) s.push_back(t.score(v));
    std::sort(s.begin(), s.end());
    return ScoreSequence(std::move(s));
}

bool landau_feasible(const ScoreSequence& s, bool strong) {
    const int n = s.length();
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += s[k - 1];
        if (k < n) {
            if (prefix < choose2(k) + (strong ? 1 : 0)) return false;
        } else if (prefix != choose2(n)) {
            return false;
        }
    }
    return true;
}

int first_landau_violation(const ScoreSequence& s) {
    const int n = s.length();
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += s[k - 1];
        if (prefix < choose2(k) || (k == n && prefix != choose2(n))) return k;
    }
    return 0;
}

Tournament realize_score_sequence(const ScoreSequence& s) {
    const int n = s.length();
    if (const int k = first_landau_violation(s); k != 0)
        throw TournamentError("score sequence " + [&] {
            std::string out;
            for (int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
            return out;
        }() + " violates Landau's condition at prefix k=" + std::to_string(k));

    // beats[u][v] for 0-based u, v.
    std::vector<std::vector<char>> beats(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<int> residual(s.begin(), s.end());
    std::vector<int> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 0);

    // Greedy: the vertex with the least residual score loses to the remaining
    // vertices that still need the most wins and beats the others.
    while (!remaining.empty()) {
        auto it = std::min_element(remaining.begin(), remaining.end(),
                                   [&](int a, int b) { return residual[a] < residual[b]; });
        const int v = *it;
        remaining.erase(it);
        std::vector<int> others = remaining;
        std::stable_sort(others.begin(), others.end(), [&](int a, int b) { return residual[a] > residual[b]; });
        const int losses = std::clamp(static_cast<int>(others.size()) - residual[v], 0, static_cast<int>(others.size()));
        for (int i = 0; i < static_cast<int>(others.size()); ++i) {
            const int w = others[i];
            if (i < losses) {
                beats[w][v] = 1;
                --residual[w];
            } else {
                beats[v][w] = 1;
            }
        }
    }

    // Repair: reversing a directed path moves one unit of score from its
    // start to its end. A vertex with excess score always reaches a vertex
    // with deficit, otherwise its out-closure would violate Landau.
    auto current = [&](int v) { return static_cast<int>(std::count(beats[v].begin(), beats[v].end(), 1)); };
    for (;;) {
        int excess = -1;
        for (int v = 0; v < n && excess < 0; ++v)
            if (current(v) > s[v]) excess = v;
        if (excess < 0) break;

        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        parent[excess] = -1;
        std::deque<int> queue{excess};
        int target = -1;
        while (!queue.empty() && target < 0) {
            const int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (!beats[u][w] || parent[w] != -2) continue;
                parent[w] = u;
                if (current(w) < s[w]) {
                    target = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (target < 0) throw std::logic_error("score repair found no augmenting path");
        for (int w = target; parent[w] >= 0; w = parent[w]) {
            const int u = parent[w];
            beats[u][w] = 0;
            beats[w][u] = 1;
        }
    }

    return Tournament::from_relation(n, [&](int u, int v) { return beats[u - 1][v - 1] != 0; });
}

}  // namespace tfvs
