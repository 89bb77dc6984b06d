#include "lexchoice/core_types.hpp"

#include <string_view>
#include <unordered_map>

namespace lexchoice {

namespace {

std::string scale_range(const ScaleSpec& scale) {
  return "[" + std::to_string(scale.min_rank) + ", " + std::to_string(scale.max_rank) + "]";
}

}  // namespace

std::vector<Violation> validate_problem(const DecisionProblem& problem) {
  std::vector<Violation> report;

  if (problem.alternatives.empty()) {
    report.push_back({ViolationKind::NoAlternatives, "no alternatives", {}, {}});
  }
  if (problem.scales.empty()) {
    report.push_back({ViolationKind::NoCriteria, "no criteria", {}, {}});
  }

  for (std::size_t j = 0; j < problem.scales.size(); ++j) {
    const ScaleSpec& scale = problem.scales[j];
    if (scale.max_rank < scale.min_rank) {
      report.push_back({ViolationKind::BadScale,
                        "scale '" + scale.name + "' has max_rank " +
                            std::to_string(scale.max_rank) + " below min_rank " +
                            std::to_string(scale.min_rank),
                        {}, j});
    }
  }

  std::unordered_map<std::string_view, std::size_t> first_seen;
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    const auto [it, inserted] = first_seen.emplace(problem.alternatives[i].id, i);
    if (!inserted) {
      report.push_back({ViolationKind::DuplicateId,
                        "alternative '" + problem.alternatives[i].id +
                            "' duplicates the id of alternative " +
                            std::to_string(it->second + 1),
                        i, {}});
    }
  }

  const std::size_t m = problem.scales.size();
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    const Alternative& alt = problem.alternatives[i];
    if (alt.values.size() != m) {
      report.push_back({ViolationKind::LengthMismatch,
                        "alternative '" + alt.id + "' has " +
                            std::to_string(alt.values.size()) + " values, expected " +
                            std::to_string(m),
                        i, {}});
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      const ScaleSpec& scale = problem.scales[j];
      if (scale.max_rank < scale.min_rank) {
        continue;  // already reported as BadScale
      }
      if (!scale.contains(alt.values[j])) {
        report.push_back({ViolationKind::ValueOutOfScale,
                          "value " + std::to_string(alt.values[j]) + " for criterion '" +
                              scale.name + "' is outside scale " + scale_range(scale) +
                              " (alternative '" + alt.id + "')",
                          i, j});
      }
    }
  }

  return report;
}

}  // namespace lexchoice
