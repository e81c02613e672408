#ifndef TFVS_GENERATORS_HPP_
#define TFVS_GENERATORS_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "tfvs/tournament.hpp"

namespace tfvs {

/// TT_n: i beats j iff i < j, so vertex 1 is the source.
Tournament transitive(int n);

/// Circular tournament: i beats j iff (j - i) mod n is in `residues`.
/// `residues` must contain exactly one of r, n - r for every r in 1..n-1.
Tournament circular(int n, const std::vector<int>& residues);

Tournament c3();
/// Paley tournament of order 7, circular(7, {1, 2, 4}).
Tournament st7();
/// st7 with vertex 1 removed, labels 2..7 shifted to 1..6.
Tournament st6();
/// Regular tournament of order 5, circular(5, {1, 2}).
Tournament rt5();

/// Adds p = m+1 and q = m+2 to an m-vertex tournament with q -> p, p -> t and
/// t -> q for every original vertex t.
Tournament pq(const Tournament& inner);

/// Strong tournament with exactly three minimal FVSs. For n >= 4, vertices
/// 1..n-2 form TT_{n-2} (1 is the source), u_1 = n-1, u_2 = n, u_1 -> u_2,
/// every vertex 2..n-2 beats both u_i and both u_i beat 1. n = 3 gives C_3.
Tournament u_family(int n);
int u_family_u1(int n);
int u_family_u2(int n);

/// T1 + T2: T1 keeps labels 1..n1, T2 is shifted by n1, T1 beats all of T2.
Tournament disjoint_sum(const Tournament& first, const Tournament& second);
/// `copies`-fold sum of `t` with itself.
Tournament repeated_sum(const Tournament& t, int copies);

/// Uniform random tournament. Pairs (i, j), i < j, are visited in row-major
/// order; each draws one value from std::mt19937_64 seeded with `seed` and
/// i beats j iff the draw's top bit is set. Reproducible across platforms.
Tournament random_tournament(int n, std::uint64_t seed);

/// Tournament whose arcs between i < j are read from bit `pair_index(i, j)`
/// of `pattern` (set bit: i beats j). Used by exhaustive scans.
Tournament from_arc_pattern(int n, std::uint64_t pattern);
int pair_count(int n);

/// Builds from a generator expression such as `st7`, `tt(5)`, `u(10)`,
/// `circular(7,1,2,4)`, `pq(st6)`, `sum(st7,c3)`, `copies(st7,3)`,
/// `random(10,42)`, `rt5`, `st6`, `c3`. Throws TournamentError on bad input.
Tournament parse_generator(std::string_view expr);

}  // namespace tfvs

#endif  // TFVS_GENERATORS_HPP_
