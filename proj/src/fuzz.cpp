#include "nmotive/fuzz.hpp"

namespace nmotive {

Cone random_cone(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<std::size_t> extra(0, 3);
  while (true) {
    std::vector<LatticePoint> gens;
    const std::size_t k = n + extra(rng);
    while (gens.size() < k) {
      LatticePoint g(n);
      Int s = 0;
      for (auto& x : g) {
        x = coord(rng);
        s += x;
      }
      if (s > 0) gens.push_back(std::move(g));
    }
    Cone c(gens, n);
    if (c.is_full_dimensional() && c.is_strictly_convex()) return c;
  }
}

LatticePoint random_cone_point(std::mt19937_64& rng, const Cone& c, long max_weight) {
  std::uniform_int_distribution<long> weight(0, max_weight);
  while (true) {
    LatticePoint p = zero_point(c.ambient_rank());
    for (const auto& g : c.generators()) p = add(p, scale(g, weight(rng)));
    if (!is_zero(p)) return p;
  }
}

Fan random_star_subdivision(std::mt19937_64& rng, const Cone& sigma, int steps) {
  Fan fan = Fan::from_cones({sigma}, sigma);
  for (int i = 0; i < steps; ++i) fan = star_subdivide(fan, random_cone_point(rng, sigma));
  return fan;
}

std::vector<FanFuzzCase> fan_fuzz(int count, std::uint64_t seed, std::size_t max_rank) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> steps(1, 4);
  std::vector<FanFuzzCase> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i) % max_rank;
    FanFuzzCase c;
    c.sigma = random_cone(rng, n);
    c.fan = random_star_subdivision(rng, c.sigma, steps(rng));
    c.passed = refinement_euler_check(c.fan, c.sigma);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace nmotive
