#pragma once

#include <string>
#include <string_view>

namespace ngstem {

/// A normalized token: a sequence of Unicode scalar values. N-gram lengths
/// are counted in scalar values, never in bytes.
using Token = std::u32string;
using TokenView = std::u32string_view;

/// Decodes UTF-8. Throws std::invalid_argument on malformed input
/// (overlong forms, surrogates and truncated sequences included).
Token decode_utf8(std::string_view bytes);

std::string encode_utf8(TokenView text);

/// Simple (one-to-one) lowercase mapping.
char32_t to_lower(char32_t c);

bool is_alphabetic(char32_t c);
bool is_space(char32_t c);

}  // namespace ngstem
