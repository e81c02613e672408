#ifndef TFVS_SCORE_SEQUENCE_HPP_
#define TFVS_SCORE_SEQUENCE_HPP_

#include <iosfwd>
#include <vector>

#include "tfvs/tournament.hpp"

namespace tfvs {

/// Non-decreasing list of vertex scores (out-degrees).
class ScoreSequence {
public:
    ScoreSequence() = default;
    /// Throws TournamentError unless `scores` is sorted with entries in [0, n-1].
    explicit ScoreSequence(std::vector<int> scores);

    int length() const { return static_cast<int>(scores_.size()); }
    int operator[](std::size_t i) const { return scores_[i]; }
    const std::vector<int>& values() const { return scores_; }
    long long sum() const;

    auto begin() const { return scores_.begin(); }
    auto end() const { return scores_.end(); }

    friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;
    friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;

private:
    std::vector<int> scores_;
};

std::ostream& operator<<(std::ostream& os, const ScoreSequence& s);

ScoreSequence score_sequence(const Tournament& t);

/// Landau's conditions. With `strong`, every proper prefix must exceed C(k,2);
/// otherwise prefixes need only reach C(k,2). The total must equal C(n,2).
bool landau_feasible(const ScoreSequence& s, bool strong);

/// First k (1-based) at which the non-strict Landau condition fails, or 0.
int first_landau_violation(const ScoreSequence& s);

/// Some tournament with score sequence `s`. Vertex i receives score s[i-1].
/// Throws TournamentError naming the violated prefix when `s` is infeasible.
Tournament realize_score_sequence(const ScoreSequence& s);

}  // namespace tfvs

#endif  // TFVS_SCORE_SEQUENCE_HPP_
