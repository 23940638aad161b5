#pragma once

#include <array>
#include <cstdint>

namespace windowlab {

// Cell values of the six published reference tables, transcribed verbatim
// (composite cells like "1-1" evaluated). Regenerated tables are compared
// against these rows; any differences are reported, never adopted.
struct PublishedRow {
    const char* key;
    std::array<std::int8_t, 8> cells;
    std::int8_t difference;  // meaningful only in tables that carry one
};

inline constexpr std::array<PublishedRow, 16> published_basis{{
    {"0000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0011", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0100", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0101", {{0, 0, 0, 0, 2, 2, 0, 0}}, 0},
    {"0110", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1010", {{0, 0, 0, 0, 2, 2, 0, 0}}, 0},
    {"1011", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1100", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"1101", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
}};

inline constexpr std::array<PublishedRow, 64> published_lost{{
    {"000000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"000001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"000010", {{0, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"000011", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"000100", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"000101", {{0, 1, 0, 0, 0, 1, 0, 0}}, 0},
    {"000110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"000111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"001000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"001001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"001010", {{0, 1, 0, 0, 1, 1, 0, 0}}, 0},
    {"001011", {{0, 1, 0, 1, 0, 1, 0, 0}}, 0},
    {"001100", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"001101", {{0, 0, 1, 0, 0, 0, 1, 0}}, 0},
    {"001110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"001111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"010000", {{1, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"010001", {{1, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"010010", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"010011", {{1, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"010100", {{1, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"010101", {{0, 0, 0, 0, 1, 2, 0, 0}}, 0},
    {"010110", {{0, 0, 0, 1, 0, 1, 0, 0}}, 0},
    {"010111", {{0, 0, 0, 1, 0, 1, 0, 0}}, 0},
    {"011000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"011001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"011010", {{0, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"011011", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"011100", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"011101", {{0, 0, 1, 0, 0, 0, 0, 0}}, 0},
    {"011110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"011111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"100000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"100001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"100010", {{0, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"100011", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"100100", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"100101", {{0, 1, 0, 0, 0, 1, 0, 0}}, 0},
    {"100110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"100111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"101000", {{1, 0, 0, 0, 1, 0, 0, 0}}, 0},
    {"101001", {{1, 0, 0, 0, 1, 0, 0, 0}}, 0},
    {"101010", {{0, 0, 0, 0, 2, 1, 0, 0}}, 0},
    {"101011", {{0, 0, 0, 1, 1, 1, 0, 0}}, 0},
    {"101100", {{0, 0, 0, 1, 0, 0, 0, 1}}, 0},
    {"101101", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"101110", {{0, 0, 0, 1, 0, 0, 0, 0}}, 0},
    {"101111", {{0, 0, 0, 1, 0, 0, 0, 0}}, 0},
    {"110000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"110001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"110010", {{0, 1, 0, 0, 0, 0, 0, 1}}, 0},
    {"110011", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"110100", {{1, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"110101", {{0, 0, 1, 0, 1, 1, 0, 0}}, 0},
    {"110110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"110111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"111000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"111001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"111010", {{0, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"111011", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"111100", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"111101", {{0, 0, 1, 0, 0, 0, 0, 0}}, 0},
    {"111110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"111111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
}};

inline constexpr std::array<PublishedRow, 64> published_adjoined0{{
    {"0000000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000010", {{0, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000011", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0000100", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000101", {{0, 1, 0, 0, 0, 1, 0, 0}}, 0},
    {"0000110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0000111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0010000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010010", {{1, 2, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010011", {{1, 1, 0, 0, 0, 0, 1, 0}}, 0},
    {"0010100", {{1, 1, 0, 0, 1, 1, 0, 0}}, 0},
    {"0010101", {{0, 1, 0, 0, 1, 2, 0, 0}}, 0},
    {"0010110", {{0, 1, 0, 1, 0, 1, 0, 0}}, 0},
    {"0010111", {{0, 1, 0, 1, 0, 1, 0, 0}}, 0},
    {"0100000", {{1, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100001", {{1, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100010", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100011", {{1, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0100100", {{2, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100101", {{1, 1, 0, 0, 0, 1, 0, 0}}, 0},
    {"0100110", {{1, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0100111", {{1, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0110000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"0110001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"0110010", {{0, 1, 0, 0, 0, 0, 0, 1}}, 0},
    {"0110011", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0110100", {{1, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"0110101", {{0, 0, 1, 0, 1, 1, 0, 0}}, 0},
    {"0110110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"0110111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1000000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000010", {{0, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000011", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"1000100", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000101", {{0, 1, 0, 0, 0, 1, 0, 0}}, 0},
    {"1000110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"1000111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"1010000", {{1, 0, 0, 0, 1, 0, 0, 0}}, 0},
    {"1010001", {{1, 0, 0, 0, 1, 0, 0, 0}}, 0},
    {"1010010", {{1, 1, 0, 0, 1, 0, 0, 0}}, 0},
    {"1010011", {{1, 0, 0, 0, 1, 0, 1, 0}}, 0},
    {"1010100", {{1, 0, 0, 0, 2, 1, 0, 0}}, 0},
    {"1010101", {{0, 0, 0, 0, 2, 2, 0, 0}}, 0},
    {"1010110", {{0, 0, 0, 1, 1, 1, 0, 0}}, 0},
    {"1010111", {{0, 0, 0, 1, 1, 1, 0, 0}}, 0},
    {"1100000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1100001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1100010", {{0, 1, 0, 0, 0, 0, 0, 1}}, 0},
    {"1100011", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"1100100", {{1, 1, 0, 0, 0, 0, 0, 1}}, 0},
    {"1100101", {{0, 1, 0, 0, 0, 1, 0, 1}}, 0},
    {"1100110", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"1100111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1110000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1110001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1110010", {{0, 1, 0, 0, 0, 0, 0, 1}}, 0},
    {"1110011", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"1110100", {{1, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"1110101", {{0, 0, 1, 0, 1, 1, 0, 0}}, 0},
    {"1110110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1110111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
}};

inline constexpr std::array<PublishedRow, 64> published_adjoined1{{
    {"0001000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0001001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0001010", {{0, 1, 0, 0, 1, 1, 0, 0}}, 0},
    {"0001011", {{0, 1, 0, 1, 0, 1, 0, 0}}, 0},
    {"0001100", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0001101", {{0, 0, 1, 0, 0, 0, 1, 0}}, 0},
    {"0001110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0001111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0011000", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0011001", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0011010", {{0, 0, 1, 0, 1, 0, 1, 0}}, 0},
    {"0011011", {{0, 0, 1, 1, 0, 0, 1, 0}}, 0},
    {"0011100", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"0011101", {{0, 0, 1, 0, 0, 0, 1, 0}}, 0},
    {"0011110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0011111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"0101000", {{1, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"0101001", {{1, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"0101010", {{0, 0, 0, 0, 2, 2, 0, 0}}, 0},
    {"0101011", {{0, 0, 0, 1, 1, 2, 0, 0}}, 0},
    {"0101100", {{0, 0, 0, 1, 0, 1, 0, 1}}, 0},
    {"0101101", {{0, 0, 1, 1, 0, 1, 0, 0}}, 0},
    {"0101110", {{0, 0, 0, 1, 0, 1, 0, 0}}, 0},
    {"0101111", {{0, 0, 0, 1, 0, 1, 0, 0}}, 0},
    {"0111000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"0111001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"0111010", {{0, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"0111011", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"0111100", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"0111101", {{0, 0, 1, 0, 0, 0, 0, 0}}, 0},
    {"0111110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001010", {{0, 1, 0, 0, 1, 1, 0, 0}}, 0},
    {"1001011", {{0, 1, 0, 1, 0, 1, 0, 0}}, 0},
    {"1001100", {{1, 1, 0, 0, 0, 0, 1, 1}}, 0},
    {"1001101", {{0, 0, 1, 0, 0, 0, 1, 0}}, 0},
    {"1001110", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"1001111", {{0, 0, 0, 0, 0, 0, 1, 0}}, 0},
    {"1011000", {{0, 0, 0, 1, 0, 0, 0, 1}}, 0},
    {"1011001", {{0, 0, 0, 1, 0, 0, 0, 1}}, 0},
    {"1011010", {{0, 0, 1, 1, 1, 0, 0, 0}}, 0},
    {"1011011", {{0, 0, 1, 2, 0, 0, 0, 0}}, 0},
    {"1011100", {{0, 0, 0, 1, 0, 0, 0, 1}}, 0},
    {"1011101", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1011110", {{0, 0, 0, 1, 0, 0, 0, 0}}, 0},
    {"1011111", {{0, 0, 0, 1, 0, 0, 0, 0}}, 0},
    {"1101000", {{1, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"1101001", {{1, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"1101010", {{0, 0, 1, 0, 2, 1, 0, 0}}, 0},
    {"1101011", {{0, 0, 1, 1, 1, 1, 0, 0}}, 0},
    {"1101100", {{0, 0, 1, 1, 0, 0, 0, 1}}, 0},
    {"1101101", {{0, 0, 2, 1, 0, 0, 0, 0}}, 0},
    {"1101110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1101111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1111000", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1111001", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1111010", {{0, 0, 1, 0, 1, 0, 0, 0}}, 0},
    {"1111011", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1111100", {{0, 0, 0, 0, 0, 0, 0, 1}}, 0},
    {"1111101", {{0, 0, 1, 0, 0, 0, 0, 0}}, 0},
    {"1111110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
}};

inline constexpr std::array<PublishedRow, 64> published_delta0{{
    {"0000000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000010", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000011", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000100", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000101", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0000111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0010010", {{1, 1, 0, 0, -1, -1, 0, 0}}, 0},
    {"0010011", {{1, 0, 0, -1, 0, -1, 1, 0}}, 1},
    {"0010100", {{1, 1, 0, 0, 1, 1, -1, -1}}, 0},
    {"0010101", {{0, 1, -1, 0, 1, 2, -1, 0}}, -1},
    {"0010110", {{0, 1, 0, 1, 0, 1, -1, 0}}, -1},
    {"0010111", {{0, 1, 0, 1, 0, 1, -1, 0}}, -1},
    {"0100000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100010", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100011", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0100100", {{1, 1, 0, 0, -1, -1, 0, 0}}, 0},
    {"0100101", {{1, 1, 0, 0, -1, -1, 0, 0}}, 0},
    {"0100110", {{1, 0, 0, -1, 0, -1, 1, 0}}, 1},
    {"0100111", {{1, 0, 0, -1, 0, -1, 1, 0}}, 1},
    {"0110000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0110001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0110010", {{0, 1, -1, 0, -1, 0, 0, 1}}, -1},
    {"0110011", {{0, 0, -1, -1, 0, 0, 1, 1}}, 0},
    {"0110100", {{1, 0, 1, 0, 1, 0, 0, -1}}, 1},
    {"0110101", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"0110110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"0110111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1000000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000010", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000011", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000100", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000101", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1000111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1010000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1010001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1010010", {{1, 1, 0, 0, -1, -1, 0, 0}}, 0},
    {"1010011", {{1, 0, 0, -1, 0, -1, 1, 0}}, 1},
    {"1010100", {{1, 0, 0, -1, 2, 1, 0, -1}}, 1},
    {"1010101", {{0, 0, -1, -1, 2, 2, 0, 0}}, 0},
    {"1010110", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"1010111", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"1100000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1100001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1100010", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1100011", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1100100", {{0, 1, -1, 0, -1, 0, 0, 1}}, -1},
    {"1100101", {{0, 1, -1, 0, -1, 0, 0, 1}}, -1},
    {"1100110", {{0, 0, -1, -1, 0, 0, 1, 1}}, 0},
    {"1100111", {{0, 0, -1, -1, 0, 0, 0, 0}}, 0},
    {"1110000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1110001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1110010", {{0, 1, -1, 0, -1, 0, 0, 1}}, 0},
    {"1110011", {{0, 0, -1, -1, 0, 0, 1, 1}}, 0},
    {"1110100", {{1, 0, 1, 0, 1, 0, 0, -1}}, 1},
    {"1110101", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"1110110", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
    {"1110111", {{0, 0, 1, 1, 0, 0, 0, 0}}, 0},
}};

inline constexpr std::array<PublishedRow, 64> published_delta1{{
    {"0001000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0001001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"0001010", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"0001011", {{0, 1, 0, 1, 0, 1, -1, 0}}, -1},
    {"0001100", {{-1, -1, 0, 0, 0, 0, 1, 1}}, 0},
    {"0001101", {{0, -1, 1, 0, 0, -1, 1, 0}}, 1},
    {"0001110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0001111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0011000", {{-1, -1, 0, 0, 0, 0, 1, 1}}, 0},
    {"0011001", {{-1, -1, 0, 0, 0, 0, 1, 1}}, 0},
    {"0011010", {{0, -1, 1, 0, 0, -1, 1, 0}}, 1},
    {"0011011", {{0, -1, 1, 0, 0, -1, 1, 0}}, 1},
    {"0011100", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0011101", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0011110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0011111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0101000", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"0101001", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"0101010", {{-1, -1, 0, 0, 2, 2, 0, 0}}, 0},
    {"0101011", {{-1, 0, 0, 1, 1, 2, -1, 0}}, -1},
    {"0101100", {{-1, 0, 0, 1, -1, 0, 0, 1}}, -1},
    {"0101101", {{0, 0, 1, 1, -1, -1, 0, 0}}, 0},
    {"0101110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0101111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111010", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111011", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111100", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111101", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"0111111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001000", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001001", {{1, 1, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001010", {{0, 0, 0, 0, 1, 1, 0, 0}}, 0},
    {"1001011", {{0, 1, 0, 1, 0, 1, -1, 0}}, -1},
    {"1001100", {{0, 0, 0, 0, 0, 0, 1, 1}}, 0},
    {"1001101", {{0, -1, 1, 0, 0, -1, 1, 0}}, 1},
    {"1001110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1001111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1011000", {{-1, 0, 0, 1, -1, 0, 0, 1}}, -1},
    {"1011001", {{-1, 0, 0, 1, -1, 0, 0, 1}}, -1},
    {"1011010", {{0, 0, 1, 1, -1, -1, 0, 0}}, 0},
    {"1011011", {{0, 0, 1, 1, -1, -1, 0, 0}}, 0},
    {"1011100", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1011101", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1011110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1011111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1101000", {{1, 0, 1, 0, 1, 0, 0, -1}}, 1},
    {"1101001", {{1, 0, 1, 0, 1, 0, 0, -1}}, 1},
    {"1101010", {{0, -1, 1, 0, 2, 1, 0, -1}}, 1},
    {"1101011", {{0, 0, 1, 1, 1, 1, -1, -1}}, 0},
    {"1101100", {{-1, 0, 0, 1, -1, 0, 0, 1}}, -1},
    {"1101101", {{0, 0, 1, 1, -1, -1, 0, 0}}, 0},
    {"1101110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1101111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111000", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111001", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111010", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111011", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111100", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111101", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111110", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
    {"1111111", {{0, 0, 0, 0, 0, 0, 0, 0}}, 0},
}};

}  // namespace windowlab
