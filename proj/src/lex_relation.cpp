#include "lexchoice/lex_relation.hpp"

#include <random>
#include <stdexcept>

#include "lexchoice/generate.hpp"

namespace lexchoice {

namespace {

void require_dimensions(const Alternative& alt, const DecisionProblem& problem) {
  if (alt.values.size() != problem.scales.size()) {
    throw std::invalid_argument("alternative '" + alt.id + "' has " +
                                std::to_string(alt.values.size()) +
                                " values but the problem has " +
                                std::to_string(problem.scales.size()) + " criteria");
  }
}

bool weakly_preferred(Verdict v) { return v != Verdict::SecondPreferred; }

}  // namespace

ComparisonOutcome compare_lex(const Alternative& a, const Alternative& b,
                              const DecisionProblem& problem) {
  require_dimensions(a, problem);
  require_dimensions(b, problem);

  for (std::size_t j = 0; j < a.values.size(); ++j) {
    if (a.values[j] != b.values[j]) {
      const Verdict verdict =
          a.values[j] > b.values[j] ? Verdict::FirstPreferred : Verdict::SecondPreferred;
      return {verdict, j + 1};
    }
  }
  return {Verdict::Equivalent, std::nullopt};
}

std::optional<std::size_t> superiority_degree(const Alternative& a, const Alternative& b,
                                              const DecisionProblem& problem) {
  return compare_lex(a, b, problem).degree;
}

AxiomReport check_order_axioms(const DecisionProblem& problem,
                               const AxiomCheckOptions& options) {
  const auto& alts = problem.alternatives;
  const std::size_t n = alts.size();
  AxiomReport report{true, true, true};
  if (n == 0) {
    return report;
  }

  const bool have_matrix = n <= options.exhaustive_pair_limit;
  std::vector<ComparisonOutcome> matrix;
  if (have_matrix) {
    matrix.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        matrix[i * n + k] = compare_lex(alts[i], alts[k], problem);
      }
    }
  }
  auto outcome = [&](std::size_t i, std::size_t k) {
    return have_matrix ? matrix[i * n + k] : compare_lex(alts[i], alts[k], problem);
  };

  auto check_pair = [&](std::size_t i, std::size_t k) {
    const ComparisonOutcome forward = outcome(i, k);
    const ComparisonOutcome backward = outcome(k, i);
    // linked: every pair produced a verdict; reaching here is the witness.
    bool consistent = false;
    switch (forward.verdict) {
      case Verdict::FirstPreferred:
        consistent =
            backward.verdict == Verdict::SecondPreferred && forward.degree == backward.degree;
        break;
      case Verdict::SecondPreferred:
        consistent =
            backward.verdict == Verdict::FirstPreferred && forward.degree == backward.degree;
        break;
      case Verdict::Equivalent:
        consistent = backward.verdict == Verdict::Equivalent && !forward.degree &&
                     !backward.degree;
        break;
    }
    if (!consistent) {
      report.strict_asymmetric = false;
    }
  };

  auto check_triple = [&](std::size_t i, std::size_t k, std::size_t l) {
    if (weakly_preferred(outcome(i, k).verdict) && weakly_preferred(outcome(k, l).verdict) &&
        !weakly_preferred(outcome(i, l).verdict)) {
      report.transitive = false;
    }
  };

  std::mt19937_64 rng(options.seed);
  if (have_matrix) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i; k < n; ++k) {
        check_pair(i, k);
      }
    }
  } else {
    for (std::size_t s = 0; s < options.sample_count; ++s) {
      check_pair(uniform_below(rng, n), uniform_below(rng, n));
    }
  }

  if (n <= options.exhaustive_triple_limit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          check_triple(i, k, l);
        }
      }
    }
  } else {
    for (std::size_t s = 0; s < options.sample_count; ++s) {
      check_triple(uniform_below(rng, n), uniform_below(rng, n), uniform_below(rng, n));
    }
  }

  return report;
}

std::vector<Alternative> pareto_kernel(const DecisionProblem& problem) {
  const auto& alts = problem.alternatives;
  if (alts.empty()) {
    return {};
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < alts.size(); ++i) {
    if (compare_lex(alts[i], alts[best], problem).verdict == Verdict::FirstPreferred) {
      best = i;
    }
  }

  std::vector<Alternative> kernel;
  for (const Alternative& alt : alts) {
    if (compare_lex(alt, alts[best], problem).verdict == Verdict::Equivalent) {
      kernel.push_back(alt);
    }
  }
  return kernel;
}

}  // namespace lexchoice
