#include "lexchoice/generate.hpp"

#include <stdexcept>

namespace lexchoice {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  // Rejection sampling: discard the partial block at the top of the 64-bit
  // range so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) {
      return draw % bound;
    }
  }
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform_int: empty range");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   uniform_below(rng, span));
}

DecisionProblem random_problem(std::mt19937_64& rng, const RandomProblemParams& params) {
  DecisionProblem problem;

  const auto m = static_cast<std::size_t>(uniform_int(
      rng, static_cast<std::int64_t>(params.min_criteria),
      static_cast<std::int64_t>(params.max_criteria)));
  const auto n = static_cast<std::size_t>(uniform_int(
      rng, static_cast<std::int64_t>(params.min_alternatives),
      static_cast<std::int64_t>(params.max_alternatives)));

  problem.scales.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::int64_t origin =
        uniform_int(rng, params.scale_origin_low, params.scale_origin_high);
    const std::int64_t count =
        uniform_int(rng, params.min_rank_count, params.max_rank_count);
    problem.scales.push_back({origin, origin + count - 1, "c" + std::to_string(j + 1)});
  }

  problem.alternatives.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Alternative alt{"a" + std::to_string(i + 1), {}};
    alt.values.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      alt.values.push_back(
          uniform_int(rng, problem.scales[j].min_rank, problem.scales[j].max_rank));
    }
    problem.alternatives.push_back(std::move(alt));
  }

  return problem;
}

}  // namespace lexchoice
