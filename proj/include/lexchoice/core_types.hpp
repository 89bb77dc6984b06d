#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lexchoice {

// Discrete integer rank range of one criterion. A scale may start at any
// integer, including a negative one; min_rank == max_rank is a legal
// single-rank scale.
struct ScaleSpec {
  std::int64_t min_rank = 0;
  std::int64_t max_rank = 0;
  std::string name;

  std::int64_t rank_count() const { return max_rank - min_rank + 1; }
  bool contains(std::int64_t value) const {
    return value >= min_rank && value <= max_rank;
  }

  bool operator==(const ScaleSpec&) const = default;
};

// One competitive alternative: an id plus one integer rank per criterion,
// stored most-important-first. All criteria are "win" type (larger is
// better); negate loss-type inputs before building an Alternative.
struct Alternative {
  std::string id;
  std::vector<std::int64_t> values;

  bool operator==(const Alternative&) const = default;
};

// A finite alternative set with its importance-ordered criterion scales.
// scales[0] belongs to the most important criterion. Instances are plain
// values with no internal mutation; share them freely across threads.
struct DecisionProblem {
  std::vector<Alternative> alternatives;
  std::vector<ScaleSpec> scales;

  std::size_t alternative_count() const { return alternatives.size(); }
  std::size_t criterion_count() const { return scales.size(); }
};

enum class ViolationKind {
  NoAlternatives,
  NoCriteria,
  BadScale,         // max_rank < min_rank
  DuplicateId,
  LengthMismatch,   // alternative value count != criterion count
  ValueOutOfScale,
};

// A single invariant violation. Violations are data, not faults: callers
// decide whether to reject, report or repair.
struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<std::size_t> alternative_index;  // 0-based, when tied to one alternative
  std::optional<std::size_t> criterion_index;    // 0-based, when tied to one criterion
};

// Returns every violation in the problem; an empty report means the problem
// is well-formed (nonempty, distinct ids, every value on its scale).
std::vector<Violation> validate_problem(const DecisionProblem& problem);

}  // namespace lexchoice
