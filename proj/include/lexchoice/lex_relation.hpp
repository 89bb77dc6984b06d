#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexchoice/core_types.hpp"

namespace lexchoice {

enum class Verdict { FirstPreferred, SecondPreferred, Equivalent };

// Outcome of one pairwise comparison. degree is the 1-based index of the
// criterion that decided it, present iff the verdict is not Equivalent.
struct ComparisonOutcome {
  Verdict verdict = Verdict::Equivalent;
  std::optional<std::size_t> degree;

  bool operator==(const ComparisonOutcome&) const = default;
};

// Compares a against b criterion by criterion in importance order; the first
// strict difference decides, and equality across all criteria means the pair
// is equivalent. Throws std::invalid_argument if either alternative's value
// count does not match the problem's criterion count.
ComparisonOutcome compare_lex(const Alternative& a, const Alternative& b,
                              const DecisionProblem& problem);

// 1-based index of the deciding criterion; empty for equivalent pairs.
std::optional<std::size_t> superiority_degree(const Alternative& a, const Alternative& b,
                                              const DecisionProblem& problem);

struct AxiomCheckOptions {
  std::size_t exhaustive_pair_limit = 200;    // above this, pairs are sampled
  std::size_t exhaustive_triple_limit = 50;   // above this, triples are sampled
  std::size_t sample_count = 20000;
  std::uint64_t seed = 0x5eedULL;
};

struct AxiomReport {
  bool linked = false;
  bool strict_asymmetric = false;
  bool transitive = false;

  bool all() const { return linked && strict_asymmetric && transitive; }
};

// Runnable witness that the pairwise relation is a total preorder on the
// problem's alternative set: every pair comparable, the strict part
// antisymmetric with matching degrees, and preferred-or-equivalent
// transitive. Exhaustive within the configured limits, sampled beyond them.
AxiomReport check_order_axioms(const DecisionProblem& problem,
                               const AxiomCheckOptions& options = {});

// All alternatives not strictly preceded by any other, in input order.
// Nonempty for any nonempty problem; members are pairwise equivalent, so the
// result is one whole equivalence class.
std::vector<Alternative> pareto_kernel(const DecisionProblem& problem);

}  // namespace lexchoice
