#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jumploci/torus.hpp"

namespace jumploci {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct SamplingOptions {
  std::uint64_t seed = kDefaultSeed;
  long max_order = 12;
  std::size_t random_points = 50;
  std::size_t grid_cap = 4096;  // full grids (Z/N)^r are used only up to this size
};

// Deterministic random integer in [lo, hi].
long draw(std::mt19937_64& rng, long lo, long hi);

// Coordinates k_i/n for a single random order n.
Angles random_torsion_point(std::mt19937_64& rng, int r, long max_order);
// Torsion point on t, parameters of order at most max_order.
Angles point_on(const TranslatedSubtorus& t, std::mt19937_64& rng, long max_order);

// Grid points (Z/N)^r for N in {2,3,4,6,12} up to max_order when small enough,
// random torsion points, and points on each component. Identity excluded,
// duplicates removed, order deterministic.
std::vector<Angles> torsion_sample(int r, const std::vector<TranslatedSubtorus>& comps, const SamplingOptions& opt);
// `count` characters alternating between the components and random points.
std::vector<Angles> oracle_characters(int r, const std::vector<TranslatedSubtorus>& comps, std::size_t count,
                                      const SamplingOptions& opt);

// Rational points of a subspace: integer combinations of its basis.
std::vector<std::vector<Rational>> sample_subspace(const LinearSubspace& l, std::size_t count, std::mt19937_64& rng);

std::string angles_to_string(const Angles& a);
// Inverse of angles_to_string on the first parenthesized tuple of `text`.
Angles parse_angles(const std::string& text);

}  // namespace jumploci
