#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexchoice/bigint.hpp"
#include "lexchoice/core_types.hpp"

namespace lexchoice {

using ConvolutionValue = BigInt;

// Importance weights, most important first. lex_coefficients builds them so
// that every weight strictly exceeds the largest total the less important
// criteria can contribute together:
//   weights[j] > sum_{k > j} weights[k] * scale_diapason(scales[k])
// which is exactly the condition under which the weighted sum reproduces the
// pairwise lexicographic order.
struct LexCoefficients {
  std::vector<BigInt> weights;
};

// Span of one scale: max_rank - min_rank. For a zero-based scale this is the
// top rank itself.
std::int64_t scale_diapason(const ScaleSpec& scale);

// Mixed-radix weights: the least important criterion gets weight 1 and each
// criterion's weight is the next one's times the next one's rank count.
// Under a uniform rank count r this is r^(m-1), ..., r, 1, i.e. ordinary
// positional notation.
LexCoefficients lex_coefficients(std::span<const ScaleSpec> scales);

// Weighted sum of the alternative's ranks, shifted to zero base per scale so
// scales starting away from zero convolve exactly. Throws
// std::invalid_argument on dimension mismatch.
ConvolutionValue convolve(const Alternative& a, const LexCoefficients& coeffs,
                          std::span<const ScaleSpec> scales);

struct AgreementReport {
  bool agrees = true;
  // ids of the first ordered pair where convolution order and the pairwise
  // relation disagree
  std::optional<std::pair<std::string, std::string>> counterexample;
};

// Checks convolve(a) >= convolve(b) <=> a preferred-or-equivalent-to b over
// every ordered pair of the problem's alternatives. With coefficients from
// lex_coefficients this must always agree; the overload taking explicit
// coefficients exists so broken weight families can be exhibited.
AgreementReport verify_agreement(const DecisionProblem& problem);
AgreementReport verify_agreement(const DecisionProblem& problem,
                                 const LexCoefficients& coeffs);

// All alternatives attaining the maximum convolution value, in input order.
// Equals pareto_kernel element for element.
std::vector<Alternative> best_by_convolution(const DecisionProblem& problem);

// Rescales one criterion's raw values onto [0, target_max]:
//   value / max(values) * target_max
// Exact rational arithmetic; at least one output equals target_max. Throws
// std::invalid_argument for a non-positive target_max or a negative value,
// std::domain_error when every value is zero (the criterion cannot
// discriminate and the rescale is undefined).
std::vector<BigRational> ration(std::span<const BigRational> raw,
                                const BigRational& target_max);

// Maps rescaled values in [0, target_max] onto integer ranks 0..rank_count-1
// by round-half-up:
//   floor(value / target_max * (rank_count - 1) + 1/2)
// Throws std::invalid_argument for values outside [0, target_max].
std::vector<std::int64_t> quantize(std::span<const BigRational> rationed,
                                   const BigRational& target_max,
                                   std::int64_t rank_count);

struct ScaleSeparationReport {
  bool holds = true;
  std::vector<std::size_t> violations;  // 1-based index of the more important scale
};

// Checks that adjacent scales do not overlap: every more important
// criterion's minimum rank must exceed the next criterion's maximum rank,
// with a zero minimum counting as 1. When this holds the criterion group is
// lexicographically ordered by the raw values alone.
ScaleSeparationReport check_scale_separation(std::span<const ScaleSpec> scales);

}  // namespace lexchoice
