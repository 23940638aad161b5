#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace windowlab {

// Window length k. Pattern ids encode windows MSB-first: the first digit of a
// window is the most significant bit, so the window 0100 has id 4.
class Order {
public:
    static constexpr int max_order = 24;

    explicit constexpr Order(int k) : k_(k) {
        if (k < 1 || k > max_order)
            throw std::invalid_argument("order must be between 1 and 24");
    }

    constexpr int value() const { return k_; }
    constexpr std::uint32_t pattern_count() const { return std::uint32_t{1} << k_; }
    constexpr std::uint32_t mask() const { return pattern_count() - 1; }

    friend constexpr bool operator==(Order a, Order b) { return a.k_ == b.k_; }

private:
    int k_;
};

using PatternId = std::uint32_t;

// Digits of a pattern id, MSB-first, as a '0'/'1' string of length k.
inline std::string pattern_text(PatternId p, Order k) {
    std::string s(static_cast<std::size_t>(k.value()), '0');
    for (int j = 0; j < k.value(); ++j)
        if ((p >> (k.value() - 1 - j)) & 1u) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

// Digit-reversal of a k-bit pattern (0100 <-> 0010).
inline PatternId reverse_pattern(PatternId p, Order k) {
    PatternId r = 0;
    for (int j = 0; j < k.value(); ++j) {
        r = (r << 1) | (p & 1u);
        p >>= 1;
    }
    return r;
}

inline PatternId complement_pattern(PatternId p, Order k) {
    return ~p & k.mask();
}

// A finite circular sequence of binary digits. Digit i of the circle is
// bits[i mod n]; values are immutable once built. Equality is positional, so
// two rotations of the same circle are distinct values.
//
// Digits are packed into 64-bit words, digit i at bit (i % 64) of word i/64;
// bits at positions >= n in the last word are kept zero.
class CircularBitSeq {
public:
    static CircularBitSeq parse(std::string_view text) {
        std::size_t b = 0, e = text.size();
        while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
        if (b == e) throw std::invalid_argument("empty sequence");
        CircularBitSeq s;
        s.reserve_digits(e - b);
        for (std::size_t i = b; i < e; ++i) {
            if (text[i] != '0' && text[i] != '1')
                throw std::invalid_argument("invalid digit at position " +
                                            std::to_string(i - b));
            s.push_back_unchecked(text[i] - '0');
        }
        return s;
    }

    // Deterministic sequence of `len` digits from a SplitMix-style stream:
    // every 64-bit output contributes 64 digits, least-significant bit first.
    static CircularBitSeq random(std::uint64_t len, std::uint64_t seed) {
        if (len == 0) throw std::invalid_argument("empty sequence");
        CircularBitSeq s;
        s.n_ = len;
        s.words_.resize(word_count(len));
        std::uint64_t state = seed;
        for (auto& w : s.words_) {
            state += 0x9E3779B97F4A7C15ull;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            w = z ^ (z >> 31);
        }
        s.mask_tail();
        return s;
    }

    // Length-n sequence read off an integer, d_0 taken from the most
    // significant of the n low bits. Matches the sweep enumeration order.
    static CircularBitSeq from_integer(int len, std::uint64_t value) {
        if (len < 1 || len > 63) throw std::invalid_argument("from_integer length must be in [1, 63]");
        CircularBitSeq s;
        s.n_ = static_cast<std::uint64_t>(len);
        std::uint64_t w = 0;
        for (int i = 0; i < len; ++i)
            w |= ((value >> (len - 1 - i)) & 1u) << i;
        s.words_.push_back(w);
        return s;
    }

    static CircularBitSeq from_digits(const std::vector<std::uint8_t>& digits) {
        if (digits.empty()) throw std::invalid_argument("empty sequence");
        CircularBitSeq s;
        s.reserve_digits(digits.size());
        for (auto d : digits) s.push_back_unchecked(d & 1u);
        return s;
    }

    std::uint64_t size() const { return n_; }

    // Digit at position i; requires i < n. Use window_at for wrapped reads.
    int digit(std::uint64_t i) const {
        return static_cast<int>((words_[i >> 6] >> (i & 63u)) & 1u);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_string() const {
        std::string out(static_cast<std::size_t>(n_), '0');
        for (std::uint64_t i = 0; i < n_; ++i)
            if (digit(i)) out[static_cast<std::size_t>(i)] = '1';
        return out;
    }

    // New sequence with digit b appended at index n.
    CircularBitSeq appended(int b) const {
        CircularBitSeq s = *this;
        if ((s.n_ & 63u) == 0) s.words_.push_back(0);
        if (b & 1) s.words_[s.n_ >> 6] |= std::uint64_t{1} << (s.n_ & 63u);
        ++s.n_;
        return s;
    }

    // Digit at old index i moves to index (i - r) mod n.
    CircularBitSeq rotated(std::int64_t r) const {
        const auto n = static_cast<std::int64_t>(n_);
        std::int64_t shift = r % n;
        if (shift < 0) shift += n;
        CircularBitSeq s;
        s.reserve_digits(n_);
        for (std::int64_t j = 0; j < n; ++j)
            s.push_back_unchecked(digit(static_cast<std::uint64_t>((j + shift) % n)));
        return s;
    }

    CircularBitSeq reversed() const {
        CircularBitSeq s;
        s.reserve_digits(n_);
        for (std::uint64_t j = 0; j < n_; ++j)
            s.push_back_unchecked(digit(n_ - 1 - j));
        return s;
    }

    CircularBitSeq complemented() const {
        CircularBitSeq s = *this;
        for (auto& w : s.words_) w = ~w;
        s.mask_tail();
        return s;
    }

    friend bool operator==(const CircularBitSeq& a, const CircularBitSeq& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    CircularBitSeq() = default;

    static std::size_t word_count(std::uint64_t n) {
        return static_cast<std::size_t>((n + 63u) >> 6);
    }

    void reserve_digits(std::uint64_t n) { words_.reserve(word_count(n)); }

    void push_back_unchecked(int b) {
        if ((n_ & 63u) == 0) words_.push_back(0);
        if (b) words_[n_ >> 6] |= std::uint64_t{1} << (n_ & 63u);
        ++n_;
    }

    void mask_tail() {
        const unsigned used = static_cast<unsigned>(n_ & 63u);
        if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1u;
    }

    std::vector<std::uint64_t> words_;
    std::uint64_t n_ = 0;
};

// The order-k window starting at position i, read circularly: digits
// d_{i mod n}, d_{(i+1) mod n}, ..., d_{(i+k-1) mod n}, encoded MSB-first.
// Positions repeat when n < k, exactly as the index rule dictates.
inline PatternId window_at(const CircularBitSeq& seq, std::uint64_t i, Order k) {
    const std::uint64_t n = seq.size();
    PatternId w = 0;
    for (int j = 0; j < k.value(); ++j)
        w = (w << 1) | static_cast<PatternId>(seq.digit((i + static_cast<std::uint64_t>(j)) % n));
    return w;
}

inline CircularBitSeq append_bit(const CircularBitSeq& seq, int b) {
    return seq.appended(b);
}

}  // namespace windowlab
