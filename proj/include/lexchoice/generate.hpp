#pragma once

#include <cstdint>
#include <random>

#include "lexchoice/core_types.hpp"

namespace lexchoice {

// Uniform integer in [0, bound), bound >= 1, by rejection sampling. Unlike
// std::uniform_int_distribution the output stream is identical on every
// platform, which keeps seeded runs byte-reproducible.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform integer in [lo, hi], inclusive.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

struct RandomProblemParams {
  std::size_t min_criteria = 1;
  std::size_t max_criteria = 6;
  std::int64_t min_rank_count = 1;
  std::int64_t max_rank_count = 12;
  std::size_t min_alternatives = 2;
  std::size_t max_alternatives = 64;
  // Scale origins are drawn from this range so non-zero-based scales get
  // exercised too.
  std::int64_t scale_origin_low = -9;
  std::int64_t scale_origin_high = 9;
};

// A well-formed random problem: ids a1..aN, every value on its scale.
DecisionProblem random_problem(std::mt19937_64& rng,
                               const RandomProblemParams& params = {});

}  // namespace lexchoice
