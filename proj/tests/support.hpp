// Test-only helpers: independent oracles and input generators. Nothing here
// may call into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lexchoice/core_types.hpp"
#include "lexchoice/generate.hpp"

namespace testsupport {

// Strict lexicographic "smaller" on value vectors via the standard library,
// an independent route to the same order the library implements by scanning.
inline bool lex_less(const std::vector<std::int64_t>& a,
                     const std::vector<std::int64_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Brute-force undominated set: ids of alternatives no other alternative
// strictly exceeds.
inline std::vector<std::string> kernel_oracle(const lexchoice::DecisionProblem& problem) {
  std::vector<std::string> ids;
  for (const auto& candidate : problem.alternatives) {
    bool dominated = false;
    for (const auto& other : problem.alternatives) {
      if (lex_less(candidate.values, other.values)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      ids.push_back(candidate.id);
    }
  }
  return ids;
}

// School-book decimal arithmetic on digit strings, for checking big-integer
// results without big-integer code.
inline std::string decimal_mul_small(const std::string& digits, std::uint32_t factor) {
  std::string out;
  std::uint64_t carry = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const std::uint64_t product = static_cast<std::uint64_t>(*it - '0') * factor + carry;
    out += static_cast<char>('0' + product % 10);
    carry = product / 10;
  }
  while (carry > 0) {
    out += static_cast<char>('0' + carry % 10);
    carry /= 10;
  }
  std::reverse(out.begin(), out.end());
  const std::size_t nonzero = out.find_first_not_of('0');
  return nonzero == std::string::npos ? "0" : out.substr(nonzero);
}

inline std::string decimal_pow(std::uint32_t base, unsigned exponent) {
  std::string out = "1";
  for (unsigned e = 0; e < exponent; ++e) {
    out = decimal_mul_small(out, base);
  }
  return out;
}

inline std::string decimal_minus_one(std::string digits) {
  std::size_t i = digits.size();
  while (i-- > 0) {
    if (digits[i] > '0') {
      --digits[i];
      break;
    }
    digits[i] = '9';
  }
  const std::size_t nonzero = digits.find_first_not_of('0');
  return nonzero == std::string::npos ? "0" : digits.substr(nonzero);
}

inline std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t count,
                                             std::size_t max_length,
                                             std::string_view letters) {
  std::vector<std::string> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t length = lexchoice::uniform_below(rng, max_length + 1);
    std::string word;
    for (std::size_t p = 0; p < length; ++p) {
      word += letters[lexchoice::uniform_below(rng, letters.size())];
    }
    words.push_back(std::move(word));
  }
  return words;
}

inline std::string pad_right(std::string word, char pad, std::size_t length) {
  word.resize(length, pad);
  return word;
}

// A strictly increasing integer table of the given size: random base, then
// random positive steps.
inline std::vector<std::int64_t> random_increasing_map(std::mt19937_64& rng,
                                                       std::size_t size,
                                                       std::int64_t base_low,
                                                       std::int64_t base_high,
                                                       std::int64_t max_step) {
  std::vector<std::int64_t> table(size);
  std::int64_t value = lexchoice::uniform_int(rng, base_low, base_high);
  for (std::size_t i = 0; i < size; ++i) {
    table[i] = value;
    value += lexchoice::uniform_int(rng, 1, max_step);
  }
  return table;
}

// Applies one strictly increasing table per criterion; table j must cover
// scale j's rank count. Scales move to the table endpoints.
inline lexchoice::DecisionProblem apply_monotone_maps(
    const lexchoice::DecisionProblem& problem,
    const std::vector<std::vector<std::int64_t>>& maps) {
  lexchoice::DecisionProblem transformed = problem;
  for (std::size_t j = 0; j < transformed.scales.size(); ++j) {
    const std::int64_t origin = problem.scales[j].min_rank;
    transformed.scales[j].min_rank = maps[j].front();
    transformed.scales[j].max_rank = maps[j].back();
    for (auto& alt : transformed.alternatives) {
      alt.values[j] = maps[j][static_cast<std::size_t>(alt.values[j] - origin)];
    }
  }
  return transformed;
}

}  // namespace testsupport
