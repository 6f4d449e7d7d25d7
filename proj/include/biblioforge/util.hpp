#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biblioforge {

// Sentinel for size parameters meaning "no limit".
inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// Thrown for unrecoverable input problems (truncated records, malformed
// canonical lines, bad config values). The message carries the location.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::string to_lower_ascii(std::string_view s);
std::string title_case(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Decodes UTF-8 into Unicode scalar values. Invalid bytes are kept as
// individual code points so arbitrary byte strings still get a distance.
std::vector<char32_t> decode_utf8(std::string_view s);

// Stable 64-bit FNV-1a, used for generated record ids.
std::uint64_t fnv1a64(std::string_view s);
std::string to_hex(std::uint64_t v);

// RFC 4180 field quoting: fields containing comma, quote or newline are
// wrapped in double quotes with inner quotes doubled.
std::string csv_escape(std::string_view field);

// Fixed-point formatting with the C locale, e.g. format_fixed(3.466, 2) ==
// "3.47". Used for all report emission so outputs are byte-reproducible.
std::string format_fixed(double v, int decimals);

}  // namespace biblioforge
