#include "lexchoice/unicode.hpp"

#include <stdexcept>

namespace lexchoice {

namespace {

[[noreturn]] void bad_utf8(const char* what, std::size_t offset) {
  throw std::invalid_argument("invalid UTF-8: " + std::string(what) + " at byte offset " +
                              std::to_string(offset));
}

}  // namespace

std::vector<char32_t> utf8_decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());

  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      bad_utf8("bad lead byte", i);
    }
    if (i + len > text.size()) {
      bad_utf8("truncated sequence", i);
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        bad_utf8("bad continuation byte", i + k);
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t min_for_length[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < min_for_length[len]) {
      bad_utf8("overlong encoding", i);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      bad_utf8("code point out of range", i);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(char32_t code_point) {
  std::string out;
  if (code_point < 0x80) {
    out += static_cast<char>(code_point);
  } else if (code_point < 0x800) {
    out += static_cast<char>(0xC0 | (code_point >> 6));
    out += static_cast<char>(0x80 | (code_point & 0x3F));
  } else if (code_point < 0x10000) {
    out += static_cast<char>(0xE0 | (code_point >> 12));
    out += static_cast<char>(0x80 | ((code_point >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code_point & 0x3F));
  } else if (code_point <= 0x10FFFF) {
    out += static_cast<char>(0xF0 | (code_point >> 18));
    out += static_cast<char>(0x80 | ((code_point >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((code_point >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code_point & 0x3F));
  } else {
    throw std::invalid_argument("utf8_encode: code point out of range");
  }
  return out;
}

std::string utf8_encode(std::span<const char32_t> code_points) {
  std::string out;
  for (const char32_t cp : code_points) {
    out += utf8_encode(cp);
  }
  return out;
}

}  // namespace lexchoice
