#ifndef TFVS_TOURNAMENT_HPP_
#define TFVS_TOURNAMENT_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfvs/vertex_set.hpp"

namespace tfvs {

/// Raised when an input does not describe a valid tournament or violates an
/// operation's precondition.
class TournamentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Complete oriented graph on vertices 1..n. Immutable once built; every
/// constructor checks that exactly one arc joins each pair.
class Tournament {
public:
    Tournament() = default;

    /// Builds from a relation; `beats(u, v)` is queried only for u < v.
    static Tournament from_relation(int n, const std::function<bool(int, int)>& beats);
    /// Builds from out-neighbourhoods, validating totality and irreflexivity.
    static Tournament from_out_sets(std::vector<VertexSet> out);

    int order() const { return n_; }
    bool beats(int u, int v) const { return out_[u - 1].contains(v); }
    const VertexSet& out_neighbors(int v) const { return out_[v - 1]; }
    const VertexSet& in_neighbors(int v) const { return in_[v - 1]; }
    int score(int v) const { return out_[v - 1].size(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// T[S] relabelled to 1..|S| in ascending label order of S.
    Tournament induced(const VertexSet& s) const;
    /// Relabels so that new vertex i is old vertex order[i-1].
    Tournament permuted(const std::vector<int>& order) const;

    friend bool operator==(const Tournament& a, const Tournament& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

private:
    int n_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// Strong components S_1 + ... + S_r; every vertex of an earlier factor beats
/// every vertex of a later one.
struct Factorization {
    std::vector<VertexSet> factors;

    std::size_t size() const { return factors.size(); }
};

bool is_acyclic_subset(const Tournament& t, const VertexSet& s);
bool is_maximal_acyclic(const Tournament& t, const VertexSet& s);
/// Vertices of the transitive subtournament T[S], each beating all later ones.
/// Throws TournamentError when T[S] has a cycle.
std::vector<int> topological_order(const Tournament& t, const VertexSet& s);

Factorization strong_factorization(const Tournament& t);
bool is_strong(const Tournament& t);
Tournament reverse(const Tournament& t);
/// v^1 -> v^2 -> ... -> v^n, built by insertion.
std::vector<int> hamiltonian_path(const Tournament& t);

}  // namespace tfvs

#endif  // TFVS_TOURNAMENT_HPP_
