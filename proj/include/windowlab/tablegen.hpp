#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "windowlab/counting.hpp"
#include "windowlab/published_tables.hpp"
#include "windowlab/theorem.hpp"

namespace windowlab {

// Column order of all reference tables: 0100 0010 1101 1011 1010 0101 0011 1100.
inline constexpr std::array<PatternId, 8> tracked_columns{
    0b0100, 0b0010, 0b1101, 0b1011, 0b1010, 0b0101, 0b0011, 0b1100};

struct TableRow {
    std::string key;
    std::array<std::int64_t, 8> cells;
    std::optional<std::int64_t> difference;
};

struct ReferenceTable {
    std::string name;        // basis | lost | adjoined0 | adjoined1 | delta0 | delta1
    std::string key_header;  // Sequence | P | P' | P''
    std::string difference_header;  // empty when the table has no trailing column
    std::vector<TableRow> rows;
};

namespace detail {

inline BoundaryContext context_from_key(unsigned key, int appended) {
    BoundaryContext ctx{};
    for (int i = 0; i < 6; ++i)
        ctx.p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((key >> (5 - i)) & 1u);
    ctx.appended = static_cast<std::uint8_t>(appended & 1);
    return ctx;
}

template <class Multiset>
std::array<std::int64_t, 8> tracked_multiplicities(const Multiset& windows) {
    std::array<std::int64_t, 8> cells{};
    for (auto w : windows)
        for (std::size_t c = 0; c < 8; ++c)
            if (w == tracked_columns[c]) ++cells[c];
    return cells;
}

}  // namespace detail

// The 16 order-4 sequences with their tracked counts and common difference.
inline ReferenceTable gen_basis_table() {
    ReferenceTable t{"basis", "Sequence", "Difference", {}};
    for (std::uint64_t v = 0; v < 16; ++v) {
        const auto seq = CircularBitSeq::from_integer(4, v);
        const auto cv = count_windows(seq, Order(4));
        const auto report = verify_equal_differences(seq);
        if (!report.holds)
            throw std::logic_error("induction invariant violated at row " + seq.to_string());
        TableRow row{seq.to_string(), {}, *report.t};
        for (std::size_t c = 0; c < 8; ++c)
            row.cells[c] = static_cast<std::int64_t>(cv.at(tracked_columns[c]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Multiplicities of the three windows lost across the seam, per 6-digit
// boundary P. Loss does not depend on the appended digit.
inline ReferenceTable gen_lost_table() {
    ReferenceTable t{"lost", "P", "", {}};
    for (unsigned key = 0; key < 64; ++key) {
        const auto d = delta_from_context(detail::context_from_key(key, 0));
        t.rows.push_back(
            TableRow{pattern_text(key, Order(6)), detail::tracked_multiplicities(d.lost), {}});
    }
    return t;
}

// Multiplicities of the four windows gained, per 7-digit extended boundary.
inline ReferenceTable gen_adjoined_table(int appended_bit) {
    ReferenceTable t{appended_bit ? "adjoined1" : "adjoined0", appended_bit ? "P''" : "P'", "", {}};
    for (unsigned key = 0; key < 64; ++key) {
        const auto ctx = detail::context_from_key(key, appended_bit);
        const auto d = delta_from_context(ctx);
        t.rows.push_back(
            TableRow{ctx.extended_text(), detail::tracked_multiplicities(d.gained), {}});
    }
    return t;
}

// Net change (gained - lost) per tracked pattern plus the common change of
// the pair difference. A row whose four per-pair changes disagree would
// refute the induction step and throws.
inline ReferenceTable gen_delta_table(int appended_bit) {
    ReferenceTable t{appended_bit ? "delta1" : "delta0", appended_bit ? "P''" : "P'",
                 "DeltaDifference", {}};
    for (unsigned key = 0; key < 64; ++key) {
        const auto ctx = detail::context_from_key(key, appended_bit);
        const auto d = delta_from_context(ctx);
        if (!d.delta_difference)
            throw std::logic_error("induction invariant violated at row " + ctx.extended_text());
        TableRow row{ctx.extended_text(), {}, *d.delta_difference};
        for (std::size_t c = 0; c < 8; ++c) row.cells[c] = d.net[tracked_columns[c]];
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string to_tsv(const ReferenceTable& t) {
    std::string out = t.key_header;
    for (auto p : tracked_columns) out += '\t' + pattern_text(p, Order(4));
    if (!t.difference_header.empty()) out += '\t' + t.difference_header;
    out += '\n';
    for (const auto& row : t.rows) {
        out += row.key;
        for (auto c : row.cells) out += '\t' + std::to_string(c);
        if (row.difference) out += '\t' + std::to_string(*row.difference);
        out += '\n';
    }
    return out;
}

inline std::string to_markdown(const ReferenceTable& t) {
    const std::size_t ncols = 9 + (t.difference_header.empty() ? 0 : 1);
    std::string out = "| " + t.key_header;
    for (auto p : tracked_columns) out += " | " + pattern_text(p, Order(4));
    if (!t.difference_header.empty()) out += " | " + t.difference_header;
    out += " |\n|";
    for (std::size_t c = 0; c < ncols; ++c) out += " --- |";
    out += '\n';
    for (const auto& row : t.rows) {
        out += "| " + row.key;
        for (auto c : row.cells) out += " | " + std::to_string(c);
        if (row.difference) out += " | " + std::to_string(*row.difference);
        out += " |\n";
    }
    return out;
}

// One regenerated cell that disagrees with the published tables.
struct CellDiff {
    std::string table;
    std::string key;
    std::string column;  // pattern text, "Difference", or "DeltaDifference"
    std::int64_t published;
    std::int64_t generated;
};

struct ValidationReport {
    bool tables_consistent = false;       // delta rows equal adjoined minus lost
    std::uint64_t realizations_checked = 0;
    std::vector<std::string> oracle_failures;  // predicted net vs recount (expected none)
    std::vector<CellDiff> published_diffs;     // regenerated vs transcription
};

namespace detail {

template <std::size_t N>
void diff_against_published(const ReferenceTable& generated, const std::array<PublishedRow, N>& fixture,
                            std::vector<CellDiff>& out) {
    for (std::size_t r = 0; r < N; ++r) {
        const auto& gen = generated.rows[r];
        const auto& pub = fixture[r];
        if (gen.key != pub.key)
            throw std::logic_error("fixture key order mismatch in " + generated.name);
        for (std::size_t c = 0; c < 8; ++c)
            if (gen.cells[c] != pub.cells[c])
                out.push_back(CellDiff{generated.name, gen.key,
                                       pattern_text(tracked_columns[c], Order(4)),
                                       pub.cells[c], gen.cells[c]});
        if (gen.difference && *gen.difference != pub.difference)
            out.push_back(CellDiff{generated.name, gen.key, generated.difference_header,
                                   pub.difference, *gen.difference});
    }
}

}  // namespace detail

// Cross-checks the generated tables three ways: internal consistency
// (delta = adjoined - lost), a recount oracle over every concrete realization
// of every boundary, and a cell-by-cell comparison with the published
// transcription. Only the recount oracle can make the run fail; published
// differences are reported as findings.
inline ValidationReport validate_tables() {
    ValidationReport report;
    const auto lost = gen_lost_table();
    const std::array<ReferenceTable, 2> adjoined{gen_adjoined_table(0), gen_adjoined_table(1)};
    const std::array<ReferenceTable, 2> delta{gen_delta_table(0), gen_delta_table(1)};

    report.tables_consistent = true;
    for (int b = 0; b < 2; ++b)
        for (std::size_t r = 0; r < 64; ++r)
            for (std::size_t c = 0; c < 8; ++c)
                if (delta[b].rows[r].cells[c] !=
                    adjoined[b].rows[r].cells[c] - lost.rows[r].cells[c])
                    report.tables_consistent = false;

    // Realize every boundary as a length-7 sequence (d_3 free), append, and
    // compare the predicted net change of all 16 counts with a full recount.
    for (unsigned key = 0; key < 64; ++key)
        for (int fill = 0; fill < 2; ++fill)
            for (int b = 0; b < 2; ++b) {
                const auto ctx = detail::context_from_key(key, b);
                const std::vector<std::uint8_t> digits{
                    ctx.p[3], ctx.p[4], ctx.p[5], static_cast<std::uint8_t>(fill),
                    ctx.p[0], ctx.p[1], ctx.p[2]};
                const auto seq = CircularBitSeq::from_digits(digits);
                const auto grown = append_bit(seq, b);
                const auto before = count_windows(seq, Order(4));
                const auto after = count_windows(grown, Order(4));
                const auto predicted = delta_from_context(ctx).net;
                ++report.realizations_checked;
                for (PatternId p = 0; p < 16; ++p) {
                    const std::int64_t change = static_cast<std::int64_t>(after.at(p)) -
                                                static_cast<std::int64_t>(before.at(p));
                    if (change != predicted[p]) {
                        report.oracle_failures.push_back(
                            "boundary " + ctx.p_text() + " fill " + std::to_string(fill) +
                            " appended " + std::to_string(b) + " pattern " +
                            pattern_text(p, Order(4)) + ": predicted " +
                            std::to_string(predicted[p]) + ", recount " + std::to_string(change));
                        break;
                    }
                }
            }

    detail::diff_against_published(gen_basis_table(), published_basis, report.published_diffs);
    detail::diff_against_published(lost, published_lost, report.published_diffs);
    detail::diff_against_published(adjoined[0], published_adjoined0, report.published_diffs);
    detail::diff_against_published(adjoined[1], published_adjoined1, report.published_diffs);
    detail::diff_against_published(delta[0], published_delta0, report.published_diffs);
    detail::diff_against_published(delta[1], published_delta1, report.published_diffs);
    return report;
}

}  // namespace windowlab
