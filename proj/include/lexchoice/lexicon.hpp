#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexchoice/bigint.hpp"

namespace lexchoice {

using WordKey = BigInt;

enum class GapPosition { First, Last };

// Alphabet in preference order plus the placement of the padding (gap)
// symbol. The gap always carries its own code, so the radix of the positional
// encoding is symbols.size() + 1.
struct AlphabetSpec {
  std::vector<char32_t> symbols;
  GapPosition gap_position = GapPosition::First;
  std::size_t max_length = 20;

  std::size_t radix() const { return symbols.size() + 1; }
};

// Throws std::invalid_argument unless symbols is nonempty with no duplicates
// and max_length >= 1. encode_word and friends assume a validated alphabet.
void validate_alphabet(const AlphabetSpec& alphabet);

class WordTooLongError : public std::invalid_argument {
 public:
  WordTooLongError(std::string_view word, std::size_t length, std::size_t max_length);
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class UnknownSymbolError : public std::invalid_argument {
 public:
  UnknownSymbolError(std::string_view word, char32_t symbol);
  const std::string& word() const { return word_; }
  char32_t symbol() const { return symbol_; }

 private:
  std::string word_;
  char32_t symbol_;
};

// Exact positional key of a UTF-8 word, gap-padded to max_length:
//   sum over positions p of code(char_p) * radix^(max_length - p)
// With the gap first (code 0) key order over all encodable words is
// dictionary order where a prefix precedes its extensions; with the gap last
// a prefix follows them.
WordKey encode_word(std::string_view word, const AlphabetSpec& alphabet);

// Words in ascending key order; equal words keep their input order.
std::vector<std::string> sort_lexicon(std::span<const std::string> words,
                                      const AlphabetSpec& alphabet);

// radix^(max_length-1) down to radix^0: the per-position weights realised by
// encode_word. The word positions form a uniform-radix criterion family.
std::vector<BigInt> position_weights(const AlphabetSpec& alphabet);

}  // namespace lexchoice
