#include "wicdis/utf8.hpp"

#include "wicdis/errors.hpp"

namespace wicdis::utf8 {

namespace {

// Decodes one scalar starting at bytes[i]. Returns false on malformed input.
bool decode_at(std::string_view bytes, std::size_t i, char32_t& cp, std::size_t& len) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
        cp = b0;
        len = 1;
        return true;
    }
    std::size_t need;
    char32_t value;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
        need = 1;
        value = b0 & 0x1F;
        min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
        need = 2;
        value = b0 & 0x0F;
        min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
        need = 3;
        value = b0 & 0x07;
        min = 0x10000;
    } else {
        return false;
    }
    if (i + need >= bytes.size()) return false;
    for (std::size_t k = 1; k <= need; ++k) {
        const auto b = static_cast<unsigned char>(bytes[i + k]);
        if ((b & 0xC0) != 0x80) return false;
        value = (value << 6) | (b & 0x3F);
    }
    if (value < min) return false;                       // overlong
    if (value >= 0xD800 && value <= 0xDFFF) return false;  // surrogate
    if (value > 0x10FFFF) return false;
    cp = value;
    len = need + 1;
    return true;
}

}  // namespace

bool valid(std::string_view bytes) {
    std::size_t i = 0;
    while (i < bytes.size()) {
        char32_t cp;
        std::size_t len;
        if (!decode_at(bytes, i, cp, len)) return false;
        i += len;
    }
    return true;
}

std::u32string decode(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        char32_t cp;
        std::size_t len;
        if (!decode_at(bytes, i, cp, len)) {
            throw DataError("invalid UTF-8 at byte offset " + std::to_string(i));
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode(std::u32string_view codepoints) {
    std::string out;
    out.reserve(codepoints.size() * 2);
    for (char32_t cp : codepoints) out += encode_one(cp);
    return out;
}

std::string encode_one(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::size_t length(std::string_view bytes) {
    std::size_t n = 0;
    for (char c : bytes) {
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    }
    return n;
}

std::size_t scalar_to_byte(std::string_view bytes, std::size_t scalar_index) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        if ((static_cast<unsigned char>(bytes[i]) & 0xC0) != 0x80) {
            if (seen == scalar_index) return i;
            ++seen;
        }
    }
    if (seen == scalar_index) return bytes.size();
    throw DataError("scalar index " + std::to_string(scalar_index) + " past end of string");
}

std::size_t byte_to_scalar(std::string_view bytes, std::size_t byte_offset) {
    if (byte_offset > bytes.size()) {
        throw DataError("byte offset " + std::to_string(byte_offset) + " past end of string");
    }
    if (byte_offset < bytes.size() &&
        (static_cast<unsigned char>(bytes[byte_offset]) & 0xC0) == 0x80) {
        throw DataError("byte offset " + std::to_string(byte_offset) +
                        " is not on a UTF-8 scalar boundary");
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < byte_offset; ++i) {
        if ((static_cast<unsigned char>(bytes[i]) & 0xC0) != 0x80) ++n;
    }
    return n;
}

}  // namespace wicdis::utf8
