#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Three sorted range tables are emitted:
  - punctuation: general category P*
  - latin letters: general category L* whose character name contains LATIN
    (covers ASCII, Latin-1 accented letters and the Latin Extended blocks)
  - whitespace: characters str.split() treats as separators (str.isspace())

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata


def ranges(predicate):
    out = []
    start = None
    prev = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:  # surrogates are not scalar values
            match = False
        else:
            match = predicate(chr(cp))
        if match:
            if start is None:
                start = cp
            prev = cp
        elif start is not None:
            out.append((start, prev))
            start = None
    if start is not None:
        out.append((start, prev))
    return out


def is_punct(ch):
    return unicodedata.category(ch).startswith("P")


def is_latin_letter(ch):
    if not unicodedata.category(ch).startswith("L"):
        return False
    name = unicodedata.name(ch, "")
    return "LATIN" in name


def is_space(ch):
    return ch.isspace()


def emit(f, name, rs):
    f.write(f"inline constexpr CodepointRange {name}[] = {{\n")
    for i in range(0, len(rs), 4):
        row = ", ".join(f"{{0x{a:04X}, 0x{b:04X}}}" for a, b in rs[i : i + 4])
        f.write(f"    {row},\n")
    f.write("};\n\n")


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc"
    punct = ranges(is_punct)
    latin = ranges(is_latin_letter)
    space = ranges(is_space)
    with open(path, "w", encoding="utf-8") as f:
        f.write("// Generated by scripts/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
                % unicodedata.unidata_version)
        f.write("// clang-format off\n\n")
        emit(f, "kPunctuationRanges", punct)
        emit(f, "kLatinLetterRanges", latin)
        emit(f, "kWhitespaceRanges", space)
        f.write("// clang-format on\n")
    print(f"wrote {path}: {len(punct)} punct ranges, {len(latin)} latin ranges, "
          f"{len(space)} whitespace ranges")


if __name__ == "__main__":
    main()
