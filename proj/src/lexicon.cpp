#include "lexchoice/lexicon.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "lexchoice/unicode.hpp"

namespace lexchoice {

namespace {

std::string describe_too_long(std::string_view word, std::size_t length,
                              std::size_t max_length) {
  return "word '" + std::string(word) + "' has " + std::to_string(length) +
         " characters, the alphabet allows at most " + std::to_string(max_length);
}

std::string describe_unknown(std::string_view word, char32_t symbol) {
  return "word '" + std::string(word) + "' contains '" + utf8_encode(symbol) +
         "' which is not in the alphabet";
}

// Character codes for one padded word: gap first gives the gap code 0 and
// letters 1..s; gap last gives letters 0..s-1 and the gap code s.
std::vector<std::size_t> padded_codes(std::string_view word, const AlphabetSpec& alphabet) {
  const std::vector<char32_t> chars = utf8_decode(word);
  if (chars.size() > alphabet.max_length) {
    throw WordTooLongError(word, chars.size(), alphabet.max_length);
  }

  const bool gap_first = alphabet.gap_position == GapPosition::First;
  const std::size_t gap_code = gap_first ? 0 : alphabet.symbols.size();
  const std::size_t letter_base = gap_first ? 1 : 0;

  std::vector<std::size_t> codes(alphabet.max_length, gap_code);
  for (std::size_t p = 0; p < chars.size(); ++p) {
    const auto it =
        std::find(alphabet.symbols.begin(), alphabet.symbols.end(), chars[p]);
    if (it == alphabet.symbols.end()) {
      throw UnknownSymbolError(word, chars[p]);
    }
    codes[p] =
        letter_base + static_cast<std::size_t>(it - alphabet.symbols.begin());
  }
  return codes;
}

}  // namespace

WordTooLongError::WordTooLongError(std::string_view word, std::size_t length,
                                   std::size_t max_length)
    : std::invalid_argument(describe_too_long(word, length, max_length)), word_(word) {}

UnknownSymbolError::UnknownSymbolError(std::string_view word, char32_t symbol)
    : std::invalid_argument(describe_unknown(word, symbol)), word_(word), symbol_(symbol) {}

void validate_alphabet(const AlphabetSpec& alphabet) {
  if (alphabet.symbols.empty()) {
    throw std::invalid_argument("alphabet has no symbols");
  }
  if (alphabet.max_length == 0) {
    throw std::invalid_argument("alphabet max_length must be at least 1");
  }
  std::unordered_set<char32_t> seen;
  for (const char32_t symbol : alphabet.symbols) {
    if (!seen.insert(symbol).second) {
      throw std::invalid_argument("alphabet symbol '" + utf8_encode(symbol) +
                                  "' appears more than once");
    }
  }
}

WordKey encode_word(std::string_view word, const AlphabetSpec& alphabet) {
  const std::vector<std::size_t> codes = padded_codes(word, alphabet);
  const BigInt radix = alphabet.radix();
  BigInt key = 0;
  for (const std::size_t code : codes) {
    key = key * radix + code;
  }
  return key;
}

std::vector<std::string> sort_lexicon(std::span<const std::string> words,
                                      const AlphabetSpec& alphabet) {
  std::vector<std::pair<WordKey, std::size_t>> keyed;
  keyed.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    keyed.emplace_back(encode_word(words[i], alphabet), i);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& [key, index] : keyed) {
    out.push_back(words[index]);
  }
  return out;
}

std::vector<BigInt> position_weights(const AlphabetSpec& alphabet) {
  std::vector<BigInt> weights(alphabet.max_length);
  BigInt acc = 1;
  for (std::size_t p = alphabet.max_length; p-- > 0;) {
    weights[p] = acc;
    acc *= alphabet.radix();
  }
  return weights;
}

}  // namespace lexchoice
