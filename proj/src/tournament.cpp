#include "tfvs/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tfvs {

Tournament Tournament::from_relation(int n, const std::function<bool(int, int)>& beats) {
    if (n < 0) throw TournamentError("tournament order must be non-negative");
    std::vector<VertexSet> out(static_cast<std::size_t>(n), VertexSet(n));
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (beats(u, v))
                out[u - 1].insert(v);
            else
                out[v - 1].insert(u);
        }
    }
    return from_out_sets(std::move(out));
}

Tournament Tournament::from_out_sets(std::vector<VertexSet> out) {
    const int n = static_cast<int>(out.size());
    Tournament t;
    t.n_ = n;
    t.in_.assign(out.size(), VertexSet(n));
    for (int u = 1; u <= n; ++u) {
        if (out[u - 1].universe() != n) throw TournamentError("out-neighbourhood of vertex " + std::to_string(u) + " has the wrong universe");
        if (out[u - 1].contains(u)) throw TournamentError("vertex " + std::to_string(u) + " beats itself");
        for (int v : out[u - 1]) t.in_[v - 1].insert(u);
    }
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            const bool uv = out[u - 1].contains(v);
            const bool vu = out[v - 1].contains(u);
            if (uv == vu)
                throw TournamentError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") has " +
                                      (uv ? "arcs in both directions" : "no arc"));
        }
    }
    t.out_ = std::move(out);
    return t;
}

Tournament Tournament::induced(const VertexSet& s) const {
    const std::vector<int> labels = s.to_vector();
    return from_relation(static_cast<int>(labels.size()),
                         [&](int a, int b) { return beats(labels[a - 1], labels[b - 1]); });
}

Tournament Tournament::permuted(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_) throw TournamentError("permutation has the wrong length");
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n_; ++i)
        if (check[i] != i + 1) throw TournamentError("not a permutation of 1..n");
    return from_relation(n_, [&](int a, int b) { return beats(order[a - 1], order[b - 1]); });
}

bool is_acyclic_subset(const Tournament& t, const VertexSet& s) {
    // T[S] is transitive iff its internal scores are exactly 0..|S|-1.
    const int k = s.size();
    if (k <= 64) {
        std::uint64_t seen = 0;
        for (int v : s) {
            const std::uint64_t bit = std::uint64_t{1} << t.out_neighbors(v).intersection_size(s);
            if (seen & bit) return false;
            seen |= bit;
        }
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int v : s) {
        const int d = t.out_neighbors(v).intersection_size(s);
        if (seen[d]) return false;
        seen[d] = 1;
    }
    return true;
}

bool is_maximal_acyclic(const Tournament& t, const VertexSet& s) {
    if (!is_acyclic_subset(t, s)) return false;
    for (int v = 1; v <= t.order(); ++v) {
        if (s.contains(v)) continue;
        if (is_acyclic_subset(t, s.with(v))) return false;
    }
    return true;
}

std::vector<int> topological_order(const Tournament& t, const VertexSet& s) {
    const int k = s.size();
    std::vector<int> order(static_cast<std::size_t>(k), 0);
    std::vector<char> filled(static_cast<std::size_t>(k), 0);
    for (int v : s) {
        const int rank = k - 1 - t.out_neighbors(v).intersection_size(s);
        if (filled[rank]) throw TournamentError("vertex set " + s.to_string() + " induces a cycle");
        filled[rank] = 1;
        order[rank] = v;
    }
    return order;
}

Factorization strong_factorization(const Tournament& t) {
    const int n = t.order();
    std::vector<int> by_score(static_cast<std::size_t>(n));
    std::iota(by_score.begin(), by_score.end(), 1);
    std::stable_sort(by_score.begin(), by_score.end(),
                     [&](int a, int b) { return t.score(a) < t.score(b); });

    // The k lowest-scoring vertices are beaten by everyone else exactly when
    // their scores add up to C(k,2).
    Factorization bottom_up;
    VertexSet current(n);
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        const int v = by_score[k - 1];
        prefix += t.score(v);
        current.insert(v);
        if (prefix == static_cast<long long>(k) * (k - 1) / 2) {
            bottom_up.factors.push_back(current);
            current = VertexSet(n);
        }
    }
    Factorization f;
    f.factors.assign(bottom_up.factors.rbegin(), bottom_up.factors.rend());
    return f;
}

bool is_strong(const Tournament& t) { return strong_factorization(t).size() <= 1; }

Tournament reverse(const Tournament& t) {
    return Tournament::from_relation(t.order(), [&](int u, int v) { return t.beats(v, u); });
}

std::vector<int> hamiltonian_path(const Tournament& t) {
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(t.order()));
    for (int v = 1; v <= t.order(); ++v) {
        // Insert before the first vertex v beats; every earlier vertex beats v.
        auto pos = std::find_if(path.begin(), path.end(), [&](int w) { return t.beats(v, w); });
        path.insert(pos, v);
    }
    return path;
}

}  // namespace tfvs
