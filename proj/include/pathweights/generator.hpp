#pragma once

#include <cstdint>
#include <random>

#include "pathweights/forward.hpp"
#include "pathweights/rat.hpp"

namespace pathweights {

inline constexpr std::int64_t kDefaultNumeratorBound = 10;
inline constexpr std::int64_t kDefaultDenominatorBound = 4;

/// Uniform integer in [0, bound) from raw mt19937_64 output by rejection
/// (draws at or above the largest multiple of `bound` are discarded, then
/// the draw is reduced modulo `bound`). Portable across standard libraries,
/// unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform over reduced fractions p/q with |p| <= num_bound, 1 <= q <= den_bound:
/// draw p = uniform_below(2*num_bound+1) - num_bound, then q = 1 + uniform_below(den_bound),
/// and retry until gcd(|p|, q) == 1.
Rat random_weight(std::mt19937_64& rng, std::int64_t num_bound, std::int64_t den_bound);

/// Seeds mt19937_64 with `seed` and draws edge weights for pairs in
/// lexicographic order (1,2), (1,3), ..., (n-1,n).
WeightedCompleteGraph random_graph(int n, std::uint64_t seed, std::int64_t num_bound = kDefaultNumeratorBound,
                                   std::int64_t den_bound = kDefaultDenominatorBound);

}  // namespace pathweights
