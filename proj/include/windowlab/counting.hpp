#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "windowlab/bitseq.hpp"
#include "windowlab/parallel.hpp"

namespace windowlab {

// The four tracked reversal pairs, in the fixed order every difference
// computation uses: 0100-0010, 1101-1011, 1010-0101, 0011-1100.
inline constexpr std::array<std::array<PatternId, 2>, 4> tracked_pairs{{
    {{0b0100u, 0b0010u}},
    {{0b1101u, 0b1011u}},
    {{0b1010u, 0b0101u}},
    {{0b0011u, 0b1100u}},
}};

// Occurrence counts of all 2^k order-k patterns over the n circular windows
// of one sequence. The counts always sum to n.
struct CountVector {
    int k;
    std::uint64_t n;
    std::vector<std::uint64_t> counts;  // indexed by pattern id, size 2^k

    std::uint64_t at(PatternId p) const { return counts[p]; }

    friend bool operator==(const CountVector&, const CountVector&) = default;
};

// Reference counter: one window_at per start position. This is the oracle
// every faster path is checked against.
inline CountVector count_windows(const CircularBitSeq& seq, Order k) {
    CountVector cv{k.value(), seq.size(), std::vector<std::uint64_t>(k.pattern_count(), 0)};
    for (std::uint64_t i = 0; i < seq.size(); ++i)
        ++cv.counts[window_at(seq, i, k)];
    return cv;
}

namespace detail {

// Feeds digits at linear positions [from, to) of the packed words to f,
// reading each word once. No wrap handling here.
template <class F>
inline void scan_digits(const std::vector<std::uint64_t>& words, std::uint64_t from,
                        std::uint64_t to, F&& f) {
    std::uint64_t i = from;
    while (i < to) {
        std::uint64_t w = words[i >> 6] >> (i & 63u);
        const unsigned take = static_cast<unsigned>(
            std::min<std::uint64_t>(64u - (i & 63u), to - i));
        for (unsigned j = 0; j < take; ++j) {
            f(static_cast<std::uint32_t>(w & 1u));
            w >>= 1;
        }
        i += take;
    }
}

// Counts the windows starting at positions [begin, end), accumulating into
// counts. Rolls a k-bit register over the digit stream; the stream wraps at n
// as often as needed, so n < k works unchanged.
inline void count_window_range(const CircularBitSeq& seq, Order k, std::uint64_t begin,
                               std::uint64_t end, std::vector<std::uint64_t>& counts) {
    if (begin >= end) return;
    const std::uint64_t n = seq.size();
    const std::uint32_t mask = k.mask();
    std::uint32_t w = 0;
    for (int j = 0; j + 1 < k.value(); ++j)
        w = (w << 1) | static_cast<std::uint32_t>(seq.digit((begin + static_cast<std::uint64_t>(j)) % n));

    std::uint64_t remaining = end - begin;
    std::uint64_t pos = (begin + static_cast<std::uint64_t>(k.value()) - 1) % n;
    const auto roll = [&](std::uint32_t bit) {
        w = ((w << 1) | bit) & mask;
        ++counts[w];
    };
    while (remaining > 0) {
        const std::uint64_t chunk = std::min(remaining, n - pos);
        scan_digits(seq.words(), pos, pos + chunk, roll);
        remaining -= chunk;
        pos = (pos + chunk) % n;
    }
}

}  // namespace detail

// Single-pass rolling counter; result identical to count_windows. With
// workers > 1 the start positions are split into ranges counted independently
// and merged, which cannot change the totals.
inline CountVector count_windows_rolling(const CircularBitSeq& seq, Order k,
                                         unsigned workers = 1) {
    const std::uint64_t n = seq.size();
    CountVector cv{k.value(), n, std::vector<std::uint64_t>(k.pattern_count(), 0)};
    if (workers <= 1 || n < 1024) {
        detail::count_window_range(seq, k, 0, n, cv.counts);
        return cv;
    }
    std::vector<std::vector<std::uint64_t>> parts(
        workers, std::vector<std::uint64_t>(k.pattern_count(), 0));
    run_partitions(n, workers, [&](unsigned p, std::uint64_t b, std::uint64_t e) {
        detail::count_window_range(seq, k, b, e, parts[p]);
    });
    for (const auto& part : parts)
        for (std::size_t p = 0; p < cv.counts.size(); ++p) cv.counts[p] += part[p];
    return cv;
}

// The six digits astride the circular seam, d_{n-3} d_{n-2} d_{n-1} d_0 d_1 d_2,
// plus the digit d_n about to be appended. These seven digits fully determine
// how appending changes the window counts (for n >= 6).
struct BoundaryContext {
    std::array<std::uint8_t, 6> p;
    std::uint8_t appended;

    // The 7-digit string p1 p2 p3 d_n p4 p5 p6: the seam neighborhood of the
    // grown sequence.
    std::array<std::uint8_t, 7> extended() const {
        return {p[0], p[1], p[2], appended, p[3], p[4], p[5]};
    }

    unsigned key6() const {
        unsigned v = 0;
        for (auto d : p) v = (v << 1) | d;
        return v;
    }

    unsigned key7() const {
        unsigned v = 0;
        for (auto d : extended()) v = (v << 1) | d;
        return v;
    }

    std::string p_text() const { return pattern_text(key6(), Order(6)); }
    std::string extended_text() const { return pattern_text(key7(), Order(7)); }
};

inline BoundaryContext context_of(const CircularBitSeq& seq, int appended_bit) {
    const std::uint64_t n = seq.size();
    if (n < 6) throw std::invalid_argument("context undefined below length 6");
    return BoundaryContext{
        {static_cast<std::uint8_t>(seq.digit(n - 3)), static_cast<std::uint8_t>(seq.digit(n - 2)),
         static_cast<std::uint8_t>(seq.digit(n - 1)), static_cast<std::uint8_t>(seq.digit(0)),
         static_cast<std::uint8_t>(seq.digit(1)), static_cast<std::uint8_t>(seq.digit(2))},
        static_cast<std::uint8_t>(appended_bit & 1)};
}

// Net effect on order-4 counts of appending one digit: 3 windows across the
// old seam are lost, 4 windows across the new seam are gained.
// delta_difference is the change of the common pair difference; it is empty
// only if the four per-pair changes were to disagree.
struct WindowDelta {
    std::array<PatternId, 3> lost;
    std::array<PatternId, 4> gained;
    std::array<std::int64_t, 16> net;
    std::optional<std::int64_t> delta_difference;
};

inline WindowDelta delta_from_context(const BoundaryContext& ctx) {
    WindowDelta d{};
    for (int s = 0; s < 3; ++s) {
        PatternId w = 0;
        for (int j = 0; j < 4; ++j) w = (w << 1) | ctx.p[static_cast<std::size_t>(s + j)];
        d.lost[static_cast<std::size_t>(s)] = w;
    }
    const auto ext = ctx.extended();
    for (int s = 0; s < 4; ++s) {
        PatternId w = 0;
        for (int j = 0; j < 4; ++j) w = (w << 1) | ext[static_cast<std::size_t>(s + j)];
        d.gained[static_cast<std::size_t>(s)] = w;
    }
    d.net.fill(0);
    for (auto w : d.gained) ++d.net[w];
    for (auto w : d.lost) --d.net[w];
    const std::int64_t first = d.net[tracked_pairs[0][0]] - d.net[tracked_pairs[0][1]];
    bool same = true;
    for (const auto& pair : tracked_pairs)
        same = same && (d.net[pair[0]] - d.net[pair[1]] == first);
    if (same) d.delta_difference = first;
    return d;
}

// Order-4 counts of the grown sequence, computed as counts(D) plus the net
// change instead of a full recount. Context-table path for n >= 6; the same
// three-lost/four-gained windows addressed positionally for n in {4, 5},
// where the seven seam positions are no longer distinct.
inline CountVector incremental_recount(const CircularBitSeq& seq, int appended_bit) {
    const Order k4(4);
    const std::uint64_t n = seq.size();
    if (n < 4) throw std::invalid_argument("incremental path requires n >= 4");

    CountVector cv = count_windows_rolling(seq, k4);
    std::array<std::int64_t, 16> net{};
    if (n >= 6) {
        net = delta_from_context(context_of(seq, appended_bit)).net;
    } else {
        const CircularBitSeq grown = append_bit(seq, appended_bit);
        for (std::uint64_t s = n - 3; s < n; ++s) --net[window_at(seq, s, k4)];
        for (std::uint64_t s = n - 3; s <= n; ++s) ++net[window_at(grown, s, k4)];
    }
    for (std::size_t p = 0; p < 16; ++p)
        cv.counts[p] = static_cast<std::uint64_t>(static_cast<std::int64_t>(cv.counts[p]) + net[p]);
    cv.n = n + 1;
    return cv;
}

}  // namespace windowlab
