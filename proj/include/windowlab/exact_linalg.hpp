#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace windowlab {

// Row of integer coefficients. Rows stand for rational vectors up to positive
// scale; keeping them as coprime integers makes every result exact and
// canonical. All arithmetic is overflow-checked and throws rather than wrap.
using IntRow = std::vector<std::int64_t>;

namespace exact {

inline std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("exact arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    return narrow(static_cast<__int128>(a) * b);
}

// a*b - c*d, exact.
inline std::int64_t cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return narrow(static_cast<__int128>(a) * b - static_cast<__int128>(c) * d);
}

inline std::int64_t row_content(const IntRow& r) {
    std::int64_t g = 0;
    for (auto v : r) {
        g = std::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

inline int first_nonzero(const IntRow& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return static_cast<int>(i);
    return -1;
}

// Coprime coefficients, first nonzero positive. Returns false for the zero row.
inline bool normalize_row(IntRow& r) {
    const int fn = first_nonzero(r);
    if (fn < 0) return false;
    std::int64_t g = row_content(r);
    if (r[static_cast<std::size_t>(fn)] < 0) g = -g;
    if (g != 1)
        for (auto& v : r) v /= g;
    return true;
}

// target := (p/g)*target - (t/g)*row with p = row[col], t = target[col],
// g = gcd(p, t); zeroes target[col] while scaling target by a positive factor
// (pivots are kept positive). Content-reduces the target when entries grow.
inline void eliminate(IntRow& target, const IntRow& row, int col) {
    const std::size_t c = static_cast<std::size_t>(col);
    const std::int64_t p = row[c];
    const std::int64_t t = target[c];
    if (t == 0) return;
    const std::int64_t g = std::gcd(p, t);
    std::int64_t mt = p / g;
    std::int64_t mr = t / g;
    if (mt < 0) {
        mt = -mt;
        mr = -mr;
    }
    std::int64_t maxabs = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        target[i] = cross(mt, target[i], mr, row[i]);
        maxabs = std::max(maxabs, target[i] < 0 ? -target[i] : target[i]);
    }
    if (maxabs > (std::int64_t{1} << 44)) {
        const std::int64_t content = row_content(target);
        if (content > 1)
            for (auto& v : target) v /= content;
    }
}

}  // namespace exact

// Incremental builder of the row space of inserted vectors. Rows are kept in
// echelon form sorted by pivot column; insert reports whether the rank grew.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t cols) : cols_(cols) {}

    bool insert(IntRow v) {
        if (v.size() != cols_) throw std::invalid_argument("row width mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v[static_cast<std::size_t>(pivots_[i])] != 0)
                exact::eliminate(v, rows_[i], pivots_[i]);
        if (!exact::normalize_row(v)) return false;
        const int pivot = exact::first_nonzero(v);
        const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
        const auto idx = static_cast<std::size_t>(at - pivots_.begin());
        pivots_.insert(at, pivot);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<IntRow>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    std::size_t cols_;
    std::vector<IntRow> rows_;   // echelon, ascending pivots
    std::vector<int> pivots_;
};

// Reduced row echelon form over the rationals, scaled to coprime integer rows
// with positive pivots. Unique for a given row space, so equal row spaces
// compare equal.
struct Rref {
    std::size_t cols = 0;
    std::vector<IntRow> rows;
    std::vector<int> pivots;

    std::size_t rank() const { return rows.size(); }

    friend bool operator==(const Rref&, const Rref&) = default;
};

inline Rref rref_of(const SpanBuilder& sb) {
    Rref r{sb.cols(), sb.rows(), sb.pivots()};
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < r.rows.size(); ++j)
            if (r.rows[i][static_cast<std::size_t>(r.pivots[j])] != 0)
                exact::eliminate(r.rows[i], r.rows[j], r.pivots[j]);
        exact::normalize_row(r.rows[i]);
    }
    return r;
}

inline Rref rref_of(const std::vector<IntRow>& rows, std::size_t cols) {
    SpanBuilder sb(cols);
    for (const auto& r : rows) sb.insert(r);
    return rref_of(sb);
}

// Forward-eliminates v against the echelon; the zero result is exact
// membership of v in the row space.
inline IntRow reduce_against(const Rref& r, IntRow v) {
    if (v.size() != r.cols) throw std::invalid_argument("row width mismatch");
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (v[static_cast<std::size_t>(r.pivots[i])] != 0)
            exact::eliminate(v, r.rows[i], r.pivots[i]);
    return v;
}

inline bool in_span(const Rref& r, IntRow v) {
    v = reduce_against(r, std::move(v));
    return exact::first_nonzero(v) < 0;
}

// Canonical basis of {x : R x = 0}: one normalized row per free column,
// ordered by free column.
inline std::vector<IntRow> nullspace(const Rref& r) {
    std::vector<bool> is_pivot(r.cols, false);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::int64_t scale = 1;
    for (const auto& row : r.rows) {
        const std::int64_t pv = row[static_cast<std::size_t>(exact::first_nonzero(row))];
        scale = exact::mul(scale / std::gcd(scale, pv), pv);
    }
    std::vector<IntRow> basis;
    basis.reserve(r.cols - r.rows.size());
    for (std::size_t f = 0; f < r.cols; ++f) {
        if (is_pivot[f]) continue;
        IntRow x(r.cols, 0);
        x[f] = scale;
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            const std::int64_t pv = r.rows[i][static_cast<std::size_t>(r.pivots[i])];
            x[static_cast<std::size_t>(r.pivots[i])] =
                -exact::mul(scale / pv, r.rows[i][f]);
        }
        exact::normalize_row(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace windowlab
