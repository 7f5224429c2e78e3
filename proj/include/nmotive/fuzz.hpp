#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nmotive/cone.hpp"

namespace nmotive {

/// Full-dimensional strictly convex cone with n to n+3 generators, all
/// positive on (1, ..., 1).
Cone random_cone(std::mt19937_64& rng, std::size_t n);

/// A nonzero lattice point of the cone: a random combination of generators.
LatticePoint random_cone_point(std::mt19937_64& rng, const Cone& c, long max_weight = 3);

/// The fan of faces of sigma after `steps` star subdivisions at random rays.
Fan random_star_subdivision(std::mt19937_64& rng, const Cone& sigma, int steps);

struct FanFuzzCase {
  Cone sigma;
  Fan fan;
  bool passed = false;
};

/// `count` seeded cases, ranks cycling through 1..max_rank.
std::vector<FanFuzzCase> fan_fuzz(int count, std::uint64_t seed, std::size_t max_rank = 4);

}  // namespace nmotive
