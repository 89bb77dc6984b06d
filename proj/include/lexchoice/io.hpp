#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexchoice/bigint.hpp"
#include "lexchoice/core_types.hpp"
#include "lexchoice/lexicon.hpp"

namespace lexchoice {

// Syntax failure in an input file, with 1-based row/column where known
// (0 = not tied to a location). The location is baked into what().
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, std::size_t row = 0,
                      std::size_t column = 0);
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// Well-formed input whose data violates a precondition (negative value or
// all-zero column on the rationing path). Distinct from ParseError so the CLI
// can map syntax to exit 2 and data validity to exit 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message, std::size_t row = 0);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Exact rational from a decimal literal: "12", "-0.5", "3.25", "1e3".
// Throws std::invalid_argument on anything else.
BigRational parse_decimal_rational(std::string_view text);

struct RationConfig {
  BigRational target_max;   // shared upper bound after rescaling (a > 0)
  std::int64_t rank_count;  // quantized ranks land in [0, rank_count - 1]
};

struct ScalesConfig {
  std::vector<ScaleSpec> scales;
  std::optional<RationConfig> ration;
};

// Scales JSON: either a bare array of {"name", "min_rank", "max_rank"} or an
// object {"scales": [...], "ration": {"a": ..., "q": ...}}. When ration is
// configured the per-scale rank bounds may be omitted; effective scales
// become [0, q-1].
ScalesConfig parse_scales_json(std::istream& in);

struct LoadedProblem {
  DecisionProblem problem;
  std::vector<std::size_t> source_rows;  // 1-based CSV row per alternative
};

// Alternatives CSV: header "id,<name1>,...," matching the configured scales
// in order, then one row per alternative. Plain configs take integer ranks;
// with ration configured values may be decimal fractions, which are rescaled
// and quantized per criterion before the problem is built.
LoadedProblem load_problem_csv(std::istream& in, const ScalesConfig& config);

// Alphabet JSON: {"symbols": "<letters in order>",
//                 "gap_position": "first"|"last",   (default "first")
//                 "max_length": N}                  (default 20)
AlphabetSpec parse_alphabet_json(std::istream& in);

// One UTF-8 word per line; blank lines are skipped, a trailing '\r' is
// stripped. Throws ParseError (with the line number) on malformed UTF-8.
std::vector<std::string> read_word_list(std::istream& in);

struct RankingRow {
  std::size_t rank = 0;  // dense, 1-based; equal convolution values share it
  std::string id;
  BigInt value;
  bool in_kernel = false;
  std::optional<std::size_t> degree_vs_next;  // vs the row below; absent on ties and last row
};

struct RankingReport {
  std::vector<RankingRow> rows;
};

// Best-first ranking of a validated problem.
RankingReport build_ranking_report(const DecisionProblem& problem);

// Header "rank,id,convolution,in_kernel,degree_vs_next"; values as decimal
// text, never floats.
void write_ranking_csv(std::ostream& out, const RankingReport& report);

struct LexiconRow {
  std::string word;
  WordKey key;
};

// Encodes every word and sorts ascending by key, stable for duplicates.
std::vector<LexiconRow> build_lexicon(std::span<const std::string> words,
                                      const AlphabetSpec& alphabet);

// Header "word,key"; keys as decimal text.
void write_lexicon_csv(std::ostream& out, const std::vector<LexiconRow>& rows);

// RFC-4180-style field handling shared by the readers and writers above.
std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t row_for_errors = 0);
std::string csv_field(std::string_view value);

}  // namespace lexchoice
