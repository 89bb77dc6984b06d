#include "lexchoice/convolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "lexchoice/lex_relation.hpp"

namespace lexchoice {

std::int64_t scale_diapason(const ScaleSpec& scale) {
  return scale.max_rank - scale.min_rank;
}

LexCoefficients lex_coefficients(std::span<const ScaleSpec> scales) {
  std::vector<BigInt> weights(scales.size());
  BigInt acc = 1;
  for (std::size_t j = scales.size(); j-- > 0;) {
    weights[j] = acc;
    acc *= scales[j].rank_count();
  }
  return {std::move(weights)};
}

ConvolutionValue convolve(const Alternative& a, const LexCoefficients& coeffs,
                          std::span<const ScaleSpec> scales) {
  if (a.values.size() != scales.size() || coeffs.weights.size() != scales.size()) {
    throw std::invalid_argument(
        "convolve: alternative '" + a.id + "' has " + std::to_string(a.values.size()) +
        " values for " + std::to_string(scales.size()) + " scales and " +
        std::to_string(coeffs.weights.size()) + " weights");
  }
  BigInt total = 0;
  for (std::size_t j = 0; j < scales.size(); ++j) {
    total += coeffs.weights[j] * (BigInt(a.values[j]) - scales[j].min_rank);
  }
  return total;
}

AgreementReport verify_agreement(const DecisionProblem& problem) {
  return verify_agreement(problem, lex_coefficients(problem.scales));
}

AgreementReport verify_agreement(const DecisionProblem& problem,
                                 const LexCoefficients& coeffs) {
  const auto& alts = problem.alternatives;
  std::vector<BigInt> values;
  values.reserve(alts.size());
  for (const Alternative& alt : alts) {
    values.push_back(convolve(alt, coeffs, problem.scales));
  }

  for (std::size_t i = 0; i < alts.size(); ++i) {
    for (std::size_t k = 0; k < alts.size(); ++k) {
      const bool convolution_ge = values[i] >= values[k];
      const bool lex_ge =
          compare_lex(alts[i], alts[k], problem).verdict != Verdict::SecondPreferred;
      if (convolution_ge != lex_ge) {
        return {false, std::make_pair(alts[i].id, alts[k].id)};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Alternative> best_by_convolution(const DecisionProblem& problem) {
  const auto& alts = problem.alternatives;
  if (alts.empty()) {
    return {};
  }

  const LexCoefficients coeffs = lex_coefficients(problem.scales);
  std::vector<BigInt> values;
  values.reserve(alts.size());
  for (const Alternative& alt : alts) {
    values.push_back(convolve(alt, coeffs, problem.scales));
  }
  const BigInt top = *std::max_element(values.begin(), values.end());

  std::vector<Alternative> best;
  for (std::size_t i = 0; i < alts.size(); ++i) {
    if (values[i] == top) {
      best.push_back(alts[i]);
    }
  }
  return best;
}

std::vector<BigRational> ration(std::span<const BigRational> raw,
                                const BigRational& target_max) {
  if (target_max <= 0) {
    throw std::invalid_argument("ration: target_max must be positive");
  }
  BigRational top = 0;
  for (const BigRational& value : raw) {
    if (value < 0) {
      throw std::invalid_argument("ration: values must be non-negative");
    }
    top = std::max(top, value);
  }
  if (top == 0) {
    throw std::domain_error("ration: criterion has no nonzero value, cannot rescale");
  }

  std::vector<BigRational> out;
  out.reserve(raw.size());
  for (const BigRational& value : raw) {
    out.push_back(value / top * target_max);
  }
  return out;
}

std::vector<std::int64_t> quantize(std::span<const BigRational> rationed,
                                   const BigRational& target_max,
                                   std::int64_t rank_count) {
  if (target_max <= 0) {
    throw std::invalid_argument("quantize: target_max must be positive");
  }
  if (rank_count < 1) {
    throw std::invalid_argument("quantize: rank_count must be at least 1");
  }

  std::vector<std::int64_t> out;
  out.reserve(rationed.size());
  for (const BigRational& value : rationed) {
    if (value < 0 || value > target_max) {
      throw std::invalid_argument("quantize: value outside [0, target_max]");
    }
    const BigRational scaled =
        value * (rank_count - 1) / target_max + BigRational(1, 2);
    const BigInt rank = numerator(scaled) / denominator(scaled);  // floor, scaled >= 0
    out.push_back(rank.convert_to<std::int64_t>());
  }
  return out;
}

ScaleSeparationReport check_scale_separation(std::span<const ScaleSpec> scales) {
  ScaleSeparationReport report;
  for (std::size_t j = 0; j + 1 < scales.size(); ++j) {
    // A zero minimum does not count as a minimum here; the smallest nonzero
    // rank (1) stands in for it.
    const std::int64_t effective_min =
        scales[j].min_rank == 0 ? 1 : scales[j].min_rank;
    if (effective_min <= scales[j + 1].max_rank) {
      report.holds = false;
      report.violations.push_back(j + 1);
    }
  }
  return report;
}

}  // namespace lexchoice
