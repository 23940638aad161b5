#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "windowlab/counting.hpp"
#include "windowlab/parallel.hpp"

namespace windowlab {

// The four signed differences N(0100)-N(0010), N(1101)-N(1011),
// N(1010)-N(0101), N(0011)-N(1100), in that fixed order.
struct PairDifferences {
    std::array<std::int64_t, 4> d;

    friend bool operator==(const PairDifferences&, const PairDifferences&) = default;
};

inline PairDifferences pair_differences(const CountVector& cv) {
    if (cv.k != 4) throw std::invalid_argument("pair differences defined for order 4");
    PairDifferences pd{};
    for (std::size_t i = 0; i < 4; ++i)
        pd.d[i] = static_cast<std::int64_t>(cv.at(tracked_pairs[i][0])) -
                  static_cast<std::int64_t>(cv.at(tracked_pairs[i][1]));
    return pd;
}

// Verdict for one sequence: the four differences coincide (holds) and their
// common value t, or the full differences for diagnosis when they do not.
struct DifferenceReport {
    CircularBitSeq subject;
    PairDifferences diffs;
    bool holds;
    std::optional<std::int64_t> t;  // present iff holds
};

inline DifferenceReport verify_equal_differences(const CircularBitSeq& seq) {
    const PairDifferences pd = pair_differences(count_windows_rolling(seq, Order(4)));
    const bool holds = pd.d[0] == pd.d[1] && pd.d[0] == pd.d[2] && pd.d[0] == pd.d[3];
    return DifferenceReport{seq, pd, holds,
                            holds ? std::optional<std::int64_t>(pd.d[0]) : std::nullopt};
}

// Change of t caused by appending one digit. For n >= 6 the result is also
// checked against the boundary-context prediction; a mismatch there would
// falsify the delta table and throws.
inline std::int64_t verify_delta(const CircularBitSeq& seq, int appended_bit) {
    if (seq.size() < 4) throw std::invalid_argument("incremental path requires n >= 4");
    const DifferenceReport before = verify_equal_differences(seq);
    const DifferenceReport after = verify_equal_differences(append_bit(seq, appended_bit));
    if (!before.holds || !after.holds)
        throw std::logic_error("invariant violated: pair differences diverge on " +
                               (before.holds ? after.subject : before.subject).to_string());
    const std::int64_t delta = *after.t - *before.t;
    if (seq.size() >= 6) {
        const WindowDelta wd = delta_from_context(context_of(seq, appended_bit));
        if (!wd.delta_difference || *wd.delta_difference != delta)
            throw std::logic_error("invariant violated: context prediction disagrees on " +
                                   seq.to_string());
    }
    return delta;
}

// Outcome of checking every sequence of every length in an inclusive range.
// Violations (expected never) are digit strings in enumeration order: lengths
// ascending, then integer value of the digit string, MSB = d_0.
struct SweepReport {
    int n_min;
    int n_max;
    std::uint64_t checked;
    std::vector<std::string> violations;
    std::map<std::int64_t, std::uint64_t> t_histogram;
};

inline constexpr std::uint64_t default_sweep_budget = std::uint64_t{1} << 26;

namespace detail {

// Order-4 counts of the length-n sequence read off `value` (d_0 = MSB),
// without touching the heap. n <= 62.
inline std::array<std::uint32_t, 16> small_counts4(int n, std::uint64_t value) {
    std::array<std::uint32_t, 16> c{};
    std::uint32_t w = 0;
    for (int j = 0; j < 3; ++j)
        w = (w << 1) | static_cast<std::uint32_t>((value >> (n - 1 - (j % n))) & 1u);
    for (int s = 0; s < n; ++s) {
        const int pos = (s + 3) % n;
        w = ((w << 1) | static_cast<std::uint32_t>((value >> (n - 1 - pos)) & 1u)) & 15u;
        ++c[w];
    }
    return c;
}

}  // namespace detail

inline SweepReport exhaustive_verify(int n_min, int n_max, unsigned workers = 1,
                                     std::uint64_t budget = default_sweep_budget) {
    if (n_min < 1 || n_min > n_max || n_max > 62)
        throw std::invalid_argument("sweep range must satisfy 1 <= n_min <= n_max <= 62");
    std::uint64_t total = 0;
    for (int n = n_min; n <= n_max; ++n) total += std::uint64_t{1} << n;
    if (total > budget)
        throw std::runtime_error("sweep budget exceeded: would check " + std::to_string(total) +
                                 " sequences, budget " + std::to_string(budget));

    SweepReport report{n_min, n_max, total, {}, {}};
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t space = std::uint64_t{1} << n;
        // histogram slot for t is offset by n; |t| <= n always
        std::vector<std::vector<std::uint64_t>> hists(
            workers ? workers : 1, std::vector<std::uint64_t>(2 * static_cast<std::size_t>(n) + 1, 0));
        std::vector<std::vector<std::uint64_t>> bad(workers ? workers : 1);
        run_partitions(space, workers, [&](unsigned part, std::uint64_t b, std::uint64_t e) {
            auto& hist = hists[part];
            auto& viol = bad[part];
            for (std::uint64_t v = b; v < e; ++v) {
                const auto c = detail::small_counts4(n, v);
                const std::int64_t d0 = static_cast<std::int64_t>(c[0b0100]) - c[0b0010];
                const std::int64_t d1 = static_cast<std::int64_t>(c[0b1101]) - c[0b1011];
                const std::int64_t d2 = static_cast<std::int64_t>(c[0b1010]) - c[0b0101];
                const std::int64_t d3 = static_cast<std::int64_t>(c[0b0011]) - c[0b1100];
                if (d0 == d1 && d0 == d2 && d0 == d3)
                    ++hist[static_cast<std::size_t>(d0 + n)];
                else
                    viol.push_back(v);
            }
        });
        for (const auto& hist : hists)
            for (std::size_t slot = 0; slot < hist.size(); ++slot)
                if (hist[slot] != 0)
                    report.t_histogram[static_cast<std::int64_t>(slot) - n] += hist[slot];
        for (const auto& viol : bad)
            for (std::uint64_t v : viol)
                report.violations.push_back(CircularBitSeq::from_integer(n, v).to_string());
    }
    return report;
}

}  // namespace windowlab
