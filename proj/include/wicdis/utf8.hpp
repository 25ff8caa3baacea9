#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wicdis::utf8 {

// Strict UTF-8: overlong encodings, surrogates and values above U+10FFFF
// are rejected.
bool valid(std::string_view bytes);

// Decodes to Unicode scalar values. Throws DataError on invalid input,
// reporting the byte offset of the offending sequence.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view codepoints);
std::string encode_one(char32_t cp);

// Number of scalar values in a valid UTF-8 string.
std::size_t length(std::string_view bytes);

// Byte offset of the scalar with index `scalar_index` (== bytes.size() when
// scalar_index equals the scalar length). Throws DataError when the index
// is past the end.
std::size_t scalar_to_byte(std::string_view bytes, std::size_t scalar_index);

// Scalar index for a byte offset; the offset must land on a scalar boundary.
std::size_t byte_to_scalar(std::string_view bytes, std::size_t byte_offset);

}  // namespace wicdis::utf8
