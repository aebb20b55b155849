#ifndef ACHRO_BOUNDS_HPP
#define ACHRO_BOUNDS_HPP

#include <vector>

#include "achro/stats.hpp"

namespace achro {

// Size of the union of rook-graph neighbourhoods of l cells placed in
// distinct rows and columns of a p x q grid: l*(p+q-2) - l*(l-1).
// Pre: 1 <= l <= min(p,q) (throws std::invalid_argument).
long long neighborhood_size(int l, int p, int q);

// Slack a frequency-l colour class has in a complete k-colouring:
// neighborhood_size(l,p,q) - (k-1).  Negative means frequency l is
// impossible.  Pre: l in range, k >= 2.
long long excess_closed(int l, int p, int q, int k);

// Frequencies l in [1, min(p,q)] with excess_closed(l,p,q,k) >= 0, ascending.
std::vector<int> feasible_frequencies(int p, int q, int k);

// Every profile with sum c_l = k, sum l*c_l = p*q, and c_l = 0 whenever
// excess_closed(l,p,q,k) < 0.  Lexicographic in (c_1, c_2, ...).  An empty
// result certifies that no complete k-colouring of K_p x K_q exists.
// Pre: p <= q.
std::vector<FrequencyProfile> feasible_frequency_profiles(int p, int q, int k);

// Largest k whose C(k,2) colour pairs fit the p*C(q,2) + q*C(p,2) in-line
// witness slots.
int pair_capacity_bound(int p, int q);

// Sound upper bound on the achromatic number of K_p x K_q: the largest
// k <= pair_capacity_bound with a non-empty profile set.  Never below
// max(p,q).  Pre: p <= q.
int upper_bound_colors(int p, int q);

}  // namespace achro

#endif
