#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc (simple lowercase map + punctuation ranges).

Run from the repository root:  python3 tools/gen_unicode_tables.py
The output is committed; regeneration is only needed when bumping the
Unicode version of the host Python.
"""

import sys
import unicodedata

OUT = "src/unicode_tables.inc"

# Symbol-ish codepoints treated as punctuation in transcripts on top of
# general category P (spacing accents used as quote/apostrophe stand-ins).
EXTRA_PUNCT = [0x60, 0xB4, 0x2032, 0x2033]


def lower_pairs():
    pairs = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        lo = c.lower()
        if lo != c and len(lo) == 1:
            pairs.append((cp, ord(lo)))
    # Single-codepoint special case: dotted capital I lowers to plain i here,
    # full mappings with combining marks are out of scope.
    if not any(cp == 0x130 for cp, _ in pairs):
        pairs.append((0x130, 0x69))
    pairs.sort()
    return pairs


def punct_ranges():
    cps = set(EXTRA_PUNCT)
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if unicodedata.category(chr(cp)).startswith("P"):
            cps.add(cp)
    ranges = []
    for cp in sorted(cps):
        if ranges and cp == ranges[-1][1] + 1:
            ranges[-1][1] = cp
        else:
            ranges.append([cp, cp])
    return ranges


def legacy_table(codec):
    # byte -> codepoint; 0xFFFF marks bytes the codec leaves undefined.
    table = []
    for b in range(256):
        try:
            table.append(ord(bytes([b]).decode(codec)))
        except UnicodeDecodeError:
            table.append(0xFFFF)
    return table


def write_legacy(f, name, codec):
    table = legacy_table(codec)
    f.write("static constexpr uint16_t %s[256] = {\n" % name)
    for i in range(0, 256, 8):
        f.write("    " + " ".join("0x%04X," % v for v in table[i:i + 8]) + "\n")
    f.write("};\n\n")


def main():
    pairs = lower_pairs()
    ranges = punct_ranges()
    with open("src/encoding_tables.inc", "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n\n")
        write_legacy(f, "kCp1250", "cp1250")
        write_legacy(f, "kIso8859_2", "iso-8859-2")
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n")
        f.write("// Unicode version: %s\n\n" % unicodedata.unidata_version)
        f.write("static constexpr LowerPair kLowerTable[] = {\n")
        for i in range(0, len(pairs), 6):
            chunk = pairs[i:i + 6]
            f.write("    " + " ".join("{0x%X, 0x%X}," % p for p in chunk) + "\n")
        f.write("};\n\n")
        f.write("static constexpr CpRange kPunctTable[] = {\n")
        for i in range(0, len(ranges), 8):
            chunk = ranges[i:i + 8]
            f.write("    " + " ".join("{0x%X, 0x%X}," % (a, b) for a, b in chunk) + "\n")
        f.write("};\n")
    print("wrote %s: %d lower pairs, %d punct ranges" % (OUT, len(pairs), len(ranges)))


if __name__ == "__main__":
    sys.exit(main())
