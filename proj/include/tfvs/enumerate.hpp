#ifndef TFVS_ENUMERATE_HPP_
#define TFVS_ENUMERATE_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tfvs/tournament.hpp"

namespace tfvs {

using BigInt = boost::multiprecision::cpp_int;

/// Lexicographic order on vertex sets: X precedes Y when the smallest label
/// on which they differ belongs to X.
bool lex_less(const VertexSet& x, const VertexSet& y);

struct LexOrder {
    bool operator()(const VertexSet& x, const VertexSet& y) const { return lex_less(x, y); }
};

/// A node of the enumeration tree: a maximal acyclic vertex set of the prefix
/// tournament T[{1..level}] together with its topological order.
struct EnumNode {
    int level = 0;
    VertexSet set;
    std::vector<int> chain;

    friend bool operator==(const EnumNode&, const EnumNode&) = default;
};

struct EnumOptions {
    /// Only try insertion positions where the new vertex fits between its
    /// chain neighbours. Does not change the output.
    bool prune_positions = false;
    /// Process vertices by descending score (ties by label). Changes the
    /// output order, never the emitted collection.
    bool relabel_by_score = false;
    /// Re-verify every node and the parent rule with independent routines;
    /// throws std::logic_error on a violation.
    bool debug_parent_check = false;
};

/// Greedy completion of the acyclic set `x` to a maximal acyclic set of
/// T[{1..level}], adding vertices 1..level in order whenever possible. The
/// result is the lexicographically smallest maximal acyclic superset of `x`.
/// Throws TournamentError when `x` is not acyclic or not within 1..level.
VertexSet lex_smallest_extension(const Tournament& t, int level, const VertexSet& x);

EnumNode root_node(const Tournament& t);

/// Children of `node` in the enumeration tree, ordered J^0 first and then by
/// insertion position. Requires node.level < t.order().
std::vector<EnumNode> children(const Tournament& t, const EnumNode& node, const EnumOptions& options = {});

struct TraversalStats {
    std::uint64_t outputs = 0;
    std::uint64_t nodes = 0;             ///< tree nodes whose children were generated
    std::uint64_t edge_traversals = 0;   ///< total descents plus ascents
    std::uint64_t max_edges_between_outputs = 0;  ///< includes the lead-in before the first output
    std::uint64_t trailing_edges = 0;    ///< after the last output
    std::uint64_t peak_resident_labels = 0;
    std::uint64_t cap_violations = 0;    ///< non-extending nodes with more than floor(j/2)+1 children
    std::uint64_t max_children = 0;
};

/// Pull-style depth-first traversal of the enumeration tree. Each call to
/// next() does polynomial work and yields the next maximal acyclic vertex
/// set; only the root-to-current path and the children of path nodes are
/// kept in memory.
class MaximalAcyclicEnumerator {
public:
    /// `t` must outlive the enumerator.
    explicit MaximalAcyclicEnumerator(const Tournament& t, EnumOptions options = {});
    MaximalAcyclicEnumerator(const MaximalAcyclicEnumerator&) = delete;
    MaximalAcyclicEnumerator& operator=(const MaximalAcyclicEnumerator&) = delete;

    /// Writes the next set into `out`; false once the traversal is complete.
    bool next(VertexSet& out);
    bool finished() const { return done_; }
    const TraversalStats& stats() const { return stats_; }
    /// Labels currently held by the traversal.
    std::uint64_t resident_labels() const { return resident_; }

private:
    struct Frame {
        std::vector<EnumNode> kids;
        std::size_t next = 0;
    };

    void push_children(const EnumNode& node);
    bool emit(const VertexSet& set, VertexSet& out);

    Tournament relabelled_;
    const Tournament* work_;
    std::vector<int> original_label_;  // empty unless relabelled
    int n_ = 0;
    EnumOptions options_;
    std::vector<Frame> stack_;
    TraversalStats stats_;
    std::uint64_t resident_ = 0;
    std::uint64_t since_output_ = 0;
    bool started_ = false;
    bool done_ = false;
    bool leaf_pending_ = false;
};

using SetCallback = std::function<void(const VertexSet&)>;

/// Streams every maximal acyclic vertex set exactly once.
TraversalStats for_each_maximal_acyclic(const Tournament& t, const SetCallback& sink, const EnumOptions& options = {});
/// Streams the complements, i.e. every minimal feedback vertex set.
TraversalStats for_each_minimal_fvs(const Tournament& t, const SetCallback& sink, const EnumOptions& options = {});

std::vector<VertexSet> enumerate_maximal_acyclic(const Tournament& t, const EnumOptions& options = {});
std::vector<VertexSet> enumerate_minimal_fvs(const Tournament& t, const EnumOptions& options = {});

/// Number of leaves of the whole-tournament enumeration tree.
std::uint64_t count_maximal_acyclic_direct(const Tournament& t, const EnumOptions& options = {});

/// f(T) as the product of the counts of the strong factors. With workers > 1
/// the factors are counted concurrently.
BigInt count_minimal_fvs(const Tournament& t, unsigned workers = 1);

/// A minimum feedback vertex set: union of a smallest minimal FVS per strong
/// factor, first found in enumeration order.
VertexSet min_fvs(const Tournament& t);

/// Every maximal acyclic vertex set by exhaustive subset scan, sorted by
/// operator<. Independent of the tree traversal. Requires n <= 20.
std::vector<VertexSet> brute_force_maximal_acyclic(const Tournament& t);

struct DelayProfile {
    int n = 0;
    TraversalStats stats;
    std::chrono::nanoseconds total_time{0};
    std::chrono::nanoseconds max_output_time{0};
    std::chrono::nanoseconds mean_output_time{0};
};

DelayProfile delay_profile(const Tournament& t, const EnumOptions& options = {});

/// Vertices that are the source of at least one maximal transitive
/// subtournament.
VertexSet banks_winners(const Tournament& t);

}  // namespace tfvs

#endif  // TFVS_ENUMERATE_HPP_
