#pragma once

#include <cstdint>

namespace wicdis::chars {

// Unicode general category P*, plus nothing else (the Arabic marks
// U+060C, U+061B, U+061F are already in P*).
bool is_punctuation(char32_t cp);

// Latin-script letters: general category L* with LATIN in the character
// name. Covers ASCII, Latin-1 accented letters and the Extended blocks.
bool is_latin_letter(char32_t cp);

// Separator set of Python's str.split().
bool is_whitespace(char32_t cp);

// Arabic diacritics U+064B..U+065F and U+0670, plus tatweel U+0640.
bool is_arabic_diacritic(char32_t cp);

inline bool is_madda(char32_t cp) { return cp == 0x0653; }
inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
inline bool is_hindi_digit(char32_t cp) { return cp >= 0x0660 && cp <= 0x0669; }

}  // namespace wicdis::chars
