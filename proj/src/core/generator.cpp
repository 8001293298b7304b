#include "pathweights/generator.hpp"

#include <limits>
#include <numeric>

#include "pathweights/errors.hpp"

namespace pathweights {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidParameter("uniform_below needs a positive bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // accept draws <= limit
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return draw % bound;
}

Rat random_weight(std::mt19937_64& rng, std::int64_t num_bound, std::int64_t den_bound) {
  if (num_bound < 1 || den_bound < 1) throw InvalidParameter("weight bounds must be at least 1");
  for (;;) {
    const auto p = static_cast<std::int64_t>(uniform_below(rng, 2 * static_cast<std::uint64_t>(num_bound) + 1)) -
                   num_bound;
    const auto q = static_cast<std::int64_t>(1 + uniform_below(rng, static_cast<std::uint64_t>(den_bound)));
    if (std::gcd(p < 0 ? -p : p, q) == 1) return Rat(p, q);
  }
}

WeightedCompleteGraph random_graph(int n, std::uint64_t seed, std::int64_t num_bound, std::int64_t den_bound) {
  if (num_bound < 1 || den_bound < 1) throw InvalidParameter("weight bounds must be at least 1");
  std::mt19937_64 rng(seed);
  WeightedCompleteGraph g(n);
  for (const auto& [l, m] : all_pairs(n)) g.set_weight(l, m, random_weight(rng, num_bound, den_bound));
  return g;
}

}  // namespace pathweights
