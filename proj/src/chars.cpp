#include "wicdis/chars.hpp"

#include <algorithm>
#include <iterator>

namespace wicdis::chars {

namespace {

struct CodepointRange {
    char32_t first;
    char32_t last;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CodepointRange (&ranges)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(ranges), std::end(ranges), cp,
                               [](char32_t v, const CodepointRange& r) { return v < r.first; });
    return it != std::begin(ranges) && cp <= std::prev(it)->last;
}

}  // namespace

bool is_punctuation(char32_t cp) { return in_ranges(kPunctuationRanges, cp); }

bool is_latin_letter(char32_t cp) { return in_ranges(kLatinLetterRanges, cp); }

bool is_whitespace(char32_t cp) { return in_ranges(kWhitespaceRanges, cp); }

bool is_arabic_diacritic(char32_t cp) {
    return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670 || cp == 0x0640;
}

}  // namespace wicdis::chars
