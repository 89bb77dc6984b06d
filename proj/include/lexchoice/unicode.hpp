#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexchoice {

// Decodes UTF-8 into code points. Throws std::invalid_argument on malformed
// input (bad lead/continuation bytes, overlong forms, surrogates, > U+10FFFF).
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(char32_t code_point);
std::string utf8_encode(std::span<const char32_t> code_points);

}  // namespace lexchoice
