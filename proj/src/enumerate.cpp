#include "tfvs/enumerate.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tfvs {

namespace {

/// Position at which `w` can be inserted into `chain` keeping it transitive,
/// or -1. Requires the chain's membership pattern [c beats w] to be 1*0*.
int insertion_point(const Tournament& t, const std::vector<int>& chain, int w) {
    const int k = static_cast<int>(chain.size());
    int pos = 0;
    while (pos < k && t.beats(chain[pos], w)) ++pos;
    for (int i = pos; i < k; ++i)
        if (t.beats(chain[i], w)) return -1;
    return pos;
}

bool is_maximal_in_prefix(const Tournament& t, const VertexSet& set, const std::vector<int>& chain, int level) {
    for (int w = 1; w <= level; ++w) {
        if (set.contains(w)) continue;
        if (insertion_point(t, chain, w) >= 0) return false;
    }
    return true;
}

}  // namespace

bool lex_less(const VertexSet& x, const VertexSet& y) {
    const VertexSet diff = (x - y) | (y - x);
    const int first = diff.first();
    return first != 0 && x.contains(first);
}

VertexSet lex_smallest_extension(const Tournament& t, int level, const VertexSet& x) {
    if (level < 0 || level > t.order()) throw TournamentError("level out of range");
    if (!x.is_subset_of(VertexSet::prefix(t.order(), level)))
        throw TournamentError("set " + x.to_string() + " is not contained in the first " + std::to_string(level) + " vertices");
    if (!is_acyclic_subset(t, x)) throw TournamentError("set " + x.to_string() + " is not acyclic");
    VertexSet h = x;
    for (int v = 1; v <= level; ++v) {
        if (h.contains(v)) continue;
        h.insert(v);
        if (!is_acyclic_subset(t, h)) h.erase(v);
    }
    return h;
}

EnumNode root_node(const Tournament& t) {
    EnumNode root;
    root.level = t.order() >= 1 ? 1 : 0;
    root.set = VertexSet(t.order());
    if (root.level == 1) {
        root.set.insert(1);
        root.chain = {1};
    }
    return root;
}

std::vector<EnumNode> children(const Tournament& t, const EnumNode& node, const EnumOptions& options) {
    const int j = node.level;
    if (j >= t.order()) throw TournamentError("leaf nodes have no children");
    const int v = j + 1;
    const std::vector<int>& chain = node.chain;
    const int k = static_cast<int>(chain.size());

    std::vector<EnumNode> kids;
    if (const int pos = insertion_point(t, chain, v); pos >= 0) {
        EnumNode child{v, node.set.with(v), chain};
        child.chain.insert(child.chain.begin() + pos, v);
        kids.push_back(std::move(child));
        return kids;
    }

    kids.push_back(EnumNode{v, node.set, chain});
    for (int z = 1; z <= k + 1; ++z) {
        if (options.prune_positions) {
            const bool before_ok = z == 1 || t.beats(chain[z - 2], v);
            const bool after_ok = z == k + 1 || t.beats(v, chain[z - 1]);
            if (!before_ok || !after_ok) continue;
        }
        EnumNode child;
        child.level = v;
        child.set = VertexSet(t.order());
        for (int i = 1; i <= k; ++i) {
            const int c = chain[i - 1];
            if (i < z && t.beats(c, v)) {
                child.chain.push_back(c);
                child.set.insert(c);
            }
        }
        child.chain.push_back(v);
        child.set.insert(v);
        for (int i = z; i <= k; ++i) {
            const int c = chain[i - 1];
            if (t.beats(v, c)) {
                child.chain.push_back(c);
                child.set.insert(c);
            }
        }
        if (!is_maximal_in_prefix(t, child.set, child.chain, v)) continue;
        if (lex_smallest_extension(t, j, child.set.without(v)) != node.set) continue;
        const bool duplicate = std::any_of(kids.begin() + 1, kids.end(), [&](const EnumNode& e) { return e.set == child.set; });
        if (!duplicate) kids.push_back(std::move(child));
    }

    if (options.debug_parent_check) {
        const Tournament next = t.induced(VertexSet::prefix(t.order(), v));
        const Tournament cur = t.induced(VertexSet::prefix(t.order(), j));
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const EnumNode& c = kids[i];
            VertexSet local(v);
            for (int x : c.set) local.insert(x);
            if (!is_maximal_acyclic(next, local))
                throw std::logic_error("child " + c.set.to_string() + " is not maximal acyclic at level " + std::to_string(v));
            if (topological_order(next, local) != c.chain) throw std::logic_error("child chain is not the topological order");
            if (i == 0) continue;
            // Independent greedy against the prefix tournament.
            VertexSet h(j);
            for (int x : c.set)
                if (x != v) h.insert(x);
            for (int x = 1; x <= j; ++x) {
                if (h.contains(x)) continue;
                if (is_acyclic_subset(cur, h.with(x))) h.insert(x);
            }
            if (!is_maximal_acyclic(cur, h)) throw std::logic_error("greedy extension is not maximal");
            if (h.to_vector() != node.set.to_vector())
                throw std::logic_error("parent rule violated for child " + c.set.to_string());
        }
    }
    return kids;
}

MaximalAcyclicEnumerator::MaximalAcyclicEnumerator(const Tournament& t, EnumOptions options)
    : work_(&t), n_(t.order()), options_(options) {
    if (options_.relabel_by_score && n_ > 1) {
        original_label_.resize(static_cast<std::size_t>(n_));
        std::iota(original_label_.begin(), original_label_.end(), 1);
        std::stable_sort(original_label_.begin(), original_label_.end(),
                         [&](int a, int b) { return t.score(a) > t.score(b); });
        relabelled_ = t.permuted(original_label_);
        work_ = &relabelled_;
    }
}

void MaximalAcyclicEnumerator::push_children(const EnumNode& node) {
    Frame frame{children(*work_, node, options_), 0};
    ++stats_.nodes;
    const std::uint64_t count = frame.kids.size();
    stats_.max_children = std::max(stats_.max_children, count);
    const bool extends = count == 1 && frame.kids.front().set.size() == node.set.size() + 1;
    if (!extends && count > static_cast<std::uint64_t>(node.level / 2 + 1)) ++stats_.cap_violations;
    resident_ += count;
    stats_.peak_resident_labels = std::max(stats_.peak_resident_labels, resident_);
    stack_.push_back(std::move(frame));
}

bool MaximalAcyclicEnumerator::emit(const VertexSet& set, VertexSet& out) {
    if (original_label_.empty()) {
        out = set;
    } else {
        out = VertexSet(n_);
        for (int v : set) out.insert(original_label_[v - 1]);
    }
    ++stats_.outputs;
    stats_.max_edges_between_outputs = std::max(stats_.max_edges_between_outputs, since_output_);
    since_output_ = 0;
    leaf_pending_ = true;
    return true;
}

bool MaximalAcyclicEnumerator::next(VertexSet& out) {
    if (done_) return false;
    auto step = [&] {
        ++stats_.edge_traversals;
        ++since_output_;
    };
    if (!started_) {
        started_ = true;
        resident_ = 1;
        stats_.peak_resident_labels = 1;
        const EnumNode root = root_node(*work_);
        if (n_ <= 1) {
            done_ = true;
            return emit(root.set, out);
        }
        push_children(root);
    }
    for (;;) {
        if (leaf_pending_) {
            leaf_pending_ = false;
            step();
        }
        if (stack_.empty()) {
            done_ = true;
            stats_.trailing_edges = since_output_;
            return false;
        }
        Frame& top = stack_.back();
        if (top.next == top.kids.size()) {
            resident_ -= top.kids.size();
            stack_.pop_back();
            if (!stack_.empty()) step();
            continue;
        }
        const EnumNode& child = top.kids[top.next++];
        step();
        if (child.level == n_) return emit(child.set, out);
        const EnumNode node = child;
        push_children(node);
    }
}

TraversalStats for_each_maximal_acyclic(const Tournament& t, const SetCallback& sink, const EnumOptions& options) {
    MaximalAcyclicEnumerator e(t, options);
    VertexSet s;
    while (e.next(s)) sink(s);
    return e.stats();
}

TraversalStats for_each_minimal_fvs(const Tournament& t, const SetCallback& sink, const EnumOptions& options) {
    return for_each_maximal_acyclic(t, [&](const VertexSet& s) { sink(s.complement()); }, options);
}

std::vector<VertexSet> enumerate_maximal_acyclic(const Tournament& t, const EnumOptions& options) {
    std::vector<VertexSet> out;
    for_each_maximal_acyclic(t, [&](const VertexSet& s) { out.push_back(s); }, options);
    return out;
}

std::vector<VertexSet> enumerate_minimal_fvs(const Tournament& t, const EnumOptions& options) {
    std::vector<VertexSet> out;
    for_each_minimal_fvs(t, [&](const VertexSet& s) { out.push_back(s); }, options);
    return out;
}

std::uint64_t count_maximal_acyclic_direct(const Tournament& t, const EnumOptions& options) {
    std::uint64_t count = 0;
    for_each_maximal_acyclic(t, [&](const VertexSet&) { ++count; }, options);
    return count;
}

BigInt count_minimal_fvs(const Tournament& t, unsigned workers) {
    const Factorization f = strong_factorization(t);
    auto count_factor = [&t](const VertexSet& factor) -> std::uint64_t {
        if (factor.size() < 3) return 1;
        return count_maximal_acyclic_direct(t.induced(factor));
    };
    BigInt product = 1;
    if (workers <= 1 || f.size() <= 1) {
        for (const VertexSet& factor : f.factors) product *= count_factor(factor);
        return product;
    }
    std::vector<std::future<std::uint64_t>> jobs;
    for (const VertexSet& factor : f.factors) jobs.push_back(std::async(std::launch::async, count_factor, factor));
    for (auto& job : jobs) product *= job.get();
    return product;
}

VertexSet min_fvs(const Tournament& t) {
    VertexSet result(t.order());
    for (const VertexSet& factor : strong_factorization(t).factors) {
        if (factor.size() < 3) continue;
        const std::vector<int> labels = factor.to_vector();
        const Tournament local = t.induced(factor);
        VertexSet best;
        int best_size = -1;
        for_each_minimal_fvs(local, [&](const VertexSet& s) {
            if (best_size < 0 || s.size() < best_size) {
                best = s;
                best_size = s.size();
            }
        });
        for (int v : best) result.insert(labels[v - 1]);
    }
    if (!is_acyclic_subset(t, result.complement())) throw std::logic_error("min_fvs produced a set whose complement has a cycle");
    return result;
}

std::vector<VertexSet> brute_force_maximal_acyclic(const Tournament& t) {
    const int n = t.order();
    if (n > 20) throw TournamentError("brute force oracle is limited to 20 vertices");
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && t.beats(u + 1, v + 1)) {
                out[u] |= 1U << v;
                in[v] |= 1U << u;
            }

    // A tournament has a cycle iff it has a 3-cycle. Adding the top vertex v
    // to an acyclic set R closes a triangle iff some out-neighbour of v in R
    // beats some in-neighbour of v in R.
    const std::uint32_t total = 1U << n;
    std::vector<char> acyclic(total, 0);
    acyclic[0] = 1;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const int v = 31 - std::countl_zero(mask);
        const std::uint32_t rest = mask & ~(1U << v);
        if (!acyclic[rest]) continue;
        const std::uint32_t ins = in[v] & rest;
        bool ok = true;
        for (std::uint32_t outs = out[v] & rest; outs && ok; outs &= outs - 1)
            if (out[std::countr_zero(outs)] & ins) ok = false;
        acyclic[mask] = ok;
    }

    std::vector<VertexSet> result;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!acyclic[mask]) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w)
            if (!(mask >> w & 1U) && acyclic[mask | (1U << w)]) maximal = false;
        if (!maximal) continue;
        VertexSet s(n);
        for (int w = 0; w < n; ++w)
            if (mask >> w & 1U) s.insert(w + 1);
        result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end());
    return result;
}

DelayProfile delay_profile(const Tournament& t, const EnumOptions& options) {
    using Clock = std::chrono::steady_clock;
    DelayProfile profile;
    profile.n = t.order();
    MaximalAcyclicEnumerator e(t, options);
    VertexSet s;
    const auto start = Clock::now();
    auto last = start;
    for (;;) {
        const bool more = e.next(s);
        const auto now = Clock::now();
        if (!more) break;
        profile.max_output_time = std::max(profile.max_output_time, std::chrono::duration_cast<std::chrono::nanoseconds>(now - last));
        last = now;
    }
    profile.total_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    profile.stats = e.stats();
    if (profile.stats.outputs > 0)
        profile.mean_output_time = profile.total_time / static_cast<std::int64_t>(profile.stats.outputs);
    return profile;
}

VertexSet banks_winners(const Tournament& t) {
    VertexSet winners(t.order());
    for_each_maximal_acyclic(t, [&](const VertexSet& s) {
        if (!s.empty()) winners.insert(topological_order(t, s).front());
    });
    return winners;
}

}  // namespace tfvs
