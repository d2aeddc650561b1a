#pragma once

// UTF-8 aware helpers shared by the lexicon, interpreter and qualifier filter.
// Case folding covers ASCII and the Latin-1 Supplement, which is enough for
// the Western European working languages the ontologies are written in.

#include <string>
#include <string_view>
#include <vector>

namespace geosem::text {

/// Decodes UTF-8 into code points. Invalid bytes decode as U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

std::string to_lower(std::string_view s);

/// Number of code points.
std::size_t length(std::string_view s);

bool is_ascii_punct(char32_t c);
bool is_space(char32_t c);

/// Splits on whitespace and punctuation (the apostrophe included) and
/// lowercases each token. Used for query text.
std::vector<std::string> tokenize(std::string_view s);

/// Whitespace split, punctuation removed from inside each word, lowercased,
/// empty words dropped. Used for item property values.
std::vector<std::string> property_terms(std::string_view s);

/// Whitespace split without any other normalization.
std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string_view trim(std::string_view s);

}  // namespace geosem::text
