#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace syllnet::utf8 {

/// Byte offset of the first malformed sequence, or nullopt when `bytes` is
/// well-formed UTF-8 (no overlongs, surrogates or code points past U+10FFFF).
std::optional<std::size_t> find_invalid(std::string_view bytes);

/// Decodes well-formed UTF-8. Behaviour on malformed input is to substitute
/// U+FFFD; callers validate first when they care.
std::u32string decode(std::string_view bytes);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

/// Number of code points.
std::size_t length(std::string_view bytes);

}  // namespace syllnet::utf8
