#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "windowlab/counting.hpp"
#include "windowlab/exact_linalg.hpp"

namespace windowlab {

// Integer linear functional on order-k count vectors: sum over patterns of
// coeffs[p] * N(p). Normalized form has coprime coefficients and a positive
// first nonzero coefficient in pattern-id order.
struct LinearFunctional {
    int k;
    IntRow coeffs;  // size 2^k

    std::int64_t apply(const CountVector& cv) const {
        if (cv.k != k) throw std::invalid_argument("order mismatch");
        __int128 sum = 0;
        for (std::size_t p = 0; p < coeffs.size(); ++p)
            sum += static_cast<__int128>(coeffs[p]) * static_cast<std::int64_t>(cv.counts[p]);
        return exact::narrow(sum);
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t p = 0; p < coeffs.size(); ++p) {
            if (coeffs[p] == 0) continue;
            const std::int64_t c = coeffs[p];
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            const std::int64_t a = c < 0 ? -c : c;
            if (a != 1) out += std::to_string(a) + "*";
            out += pattern_text(static_cast<PatternId>(p), Order(k));
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

inline LinearFunctional normalized(LinearFunctional f) {
    exact::normalize_row(f.coeffs);
    return f;
}

// A linearly independent set of functionals all vanishing on the count vector
// of every circular sequence.
struct InvariantBasis {
    int k;
    std::string method;  // constructive | empirical
    std::vector<LinearFunctional> functionals;

    std::size_t rank() const { return functionals.size(); }
};

namespace detail {

inline std::size_t support_size(const IntRow& r) {
    std::size_t s = 0;
    for (auto v : r) s += v != 0;
    return s;
}

inline InvariantBasis make_basis(Order k, std::string method, std::vector<IntRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) {
        const std::size_t sa = support_size(a), sb = support_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    InvariantBasis basis{k.value(), std::move(method), {}};
    basis.functionals.reserve(rows.size());
    for (auto& r : rows) basis.functionals.push_back(LinearFunctional{k.value(), std::move(r)});
    return basis;
}

inline void check_discovery_order(Order k, int max_allowed) {
    if (k.value() > max_allowed)
        throw std::invalid_argument("order too large for discovery (max " +
                                    std::to_string(max_allowed) + ")");
}

// Conservation constraint rows of the de Bruijn graph on (k-1)-digit words:
// for each word w, (windows extending w on the right) minus (windows
// extending w on the left).
inline std::vector<IntRow> conservation_rows(Order k) {
    const std::size_t cols = k.pattern_count();
    const int m = k.value() - 1;
    std::vector<IntRow> rows;
    rows.reserve(std::size_t{1} << m);
    for (std::uint32_t node = 0; node < (std::uint32_t{1} << m); ++node) {
        IntRow row(cols, 0);
        for (std::uint32_t b = 0; b < 2; ++b) {
            row[(node << 1) | b] += 1;
            row[(b << m) | node] -= 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Rref constructive_rref(Order k) {
    check_discovery_order(k, 12);
    return rref_of(conservation_rows(k), k.pattern_count());
}

}  // namespace detail

// Every circular sequence's count vector is a circulation on the order-(k-1)
// de Bruijn graph, so each node's flow conservation yields a vanishing
// functional; one of the 2^(k-1) constraints is dependent, leaving rank
// 2^(k-1) - 1 (k = 1 has a single self-cancelling constraint, rank 0).
inline InvariantBasis constructive_basis(Order k) {
    const Rref r = detail::constructive_rref(k);
    return detail::make_basis(k, "constructive", r.rows);
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

inline std::uint64_t necklace_count(unsigned n) {
    std::uint64_t sum = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += euler_phi(d) * (std::uint64_t{1} << (n / d));
    return sum / n;
}

// Count vectors are rotation invariant, so enumerating one representative per
// rotation class loses nothing; this is the enumeration cost of an empirical
// run over lengths 1..max_len.
inline std::uint64_t empirical_work_estimate(unsigned max_len) {
    std::uint64_t sum = 0;
    for (unsigned n = 1; n <= max_len && n <= 63; ++n) sum += necklace_count(n);
    return sum;
}

// Visits every binary necklace (lexicographically least rotation) of length
// exactly n, in lexicographic order, as digits[0..n-1].
template <class F>
void for_each_necklace(unsigned n, F&& visit) {
    std::vector<std::uint8_t> a(n + 1, 0);
    const auto rec = [&](auto&& self, unsigned t, unsigned p) -> void {
        if (t > n) {
            if (n % p == 0) visit(a.data() + 1, n);
            return;
        }
        a[t] = a[t - p];
        self(self, t + 1, p);
        if (a[t - p] == 0) {
            a[t] = 1;
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
}

inline constexpr std::uint64_t default_discovery_budget = std::uint64_t{1} << 22;

// Independent oracle for constructive_basis: stack the count vectors of all
// sequences of lengths 1..max_len and compute the left annihilator of the
// stack by exact elimination. Simple cycles of the de Bruijn graph have
// length at most 2^(k-1) and each is itself a circular sequence, so
// max_len >= 2^(k-1) certifies that the stack spans the full count space.
//
// Candidates are screened against the current annihilator with plain integer
// dot products; only a vector the screen proves independent (a rank growth,
// which happens at most 2^(k-1) + 1 times) touches the exact elimination.
inline InvariantBasis empirical_basis(Order k, unsigned max_len,
                                      std::uint64_t budget = default_discovery_budget) {
    detail::check_discovery_order(k, 12);
    if (max_len < (1u << (k.value() - 1)))
        throw std::invalid_argument("empirical span requires max_len >= 2^(k-1)");
    const std::uint64_t estimate = empirical_work_estimate(max_len);
    if (estimate > budget)
        throw std::runtime_error("discovery budget exceeded: would enumerate " +
                                 std::to_string(estimate) + " rotation classes, budget " +
                                 std::to_string(budget));

    const std::size_t cols = k.pattern_count();
    SpanBuilder span(cols);
    // The screen stores the current annihilator column-major. When every
    // |row . v| is provably below 2^15 (|v|_1 <= max_len times the largest
    // coefficient), four rows share one word in 16-bit lanes: the packed sum
    // is zero exactly when every lane is zero, since lane values stay within
    // a balanced base-2^16 digit. Otherwise rows are kept one per word.
    std::vector<std::int64_t> screen;  // [w*words + j]
    std::size_t screen_rows = 0, screen_words = 0;
    std::size_t lanes = 1;
    const auto refresh = [&] {
        const auto ns = nullspace(rref_of(span));
        screen_rows = ns.size();
        std::int64_t maxc = 0;
        for (const auto& row : ns)
            for (auto cf : row) maxc = std::max(maxc, cf < 0 ? -cf : cf);
        const bool packable = maxc * static_cast<std::int64_t>(max_len) < (std::int64_t{1} << 15);
        lanes = packable ? 4 : 1;
        screen_words = (screen_rows + lanes - 1) / lanes;
        screen.assign(cols * screen_words, 0);
        for (std::size_t w = 0; w < cols; ++w)
            for (std::size_t r = 0; r < screen_rows; ++r)
                screen[w * screen_words + r / lanes] +=
                    ns[r][w] * (std::int64_t{1} << (16 * (r % lanes)));
    };
    refresh();

    std::vector<std::uint8_t> ext(static_cast<std::size_t>(max_len) + static_cast<std::size_t>(k.value()), 0);
    std::vector<std::uint32_t> windows(max_len, 0);
    std::vector<std::int64_t> acc(cols, 0);
    const std::uint32_t mask = k.mask();

    const auto process = [&](const std::uint8_t* digits, unsigned n) {
        if (screen_rows == 0) return;  // span already full
        for (unsigned i = 0; i < n; ++i) ext[i] = digits[i];
        for (unsigned i = 0; i + 1 < static_cast<unsigned>(k.value()); ++i)
            ext[n + i] = digits[i % n];
        std::uint32_t w = 0;
        for (unsigned i = 0; i + 1 < static_cast<unsigned>(k.value()); ++i)
            w = (w << 1) | ext[i];
        for (unsigned s = 0; s < n; ++s) {
            w = ((w << 1) | ext[s + static_cast<unsigned>(k.value()) - 1]) & mask;
            windows[s] = w;
        }
        std::fill_n(acc.begin(), screen_words, 0);
        for (unsigned s = 0; s < n; ++s) {
            const std::int64_t* col = &screen[windows[s] * screen_words];
            for (std::size_t j = 0; j < screen_words; ++j) acc[j] += col[j];
        }
        bool zero = true;
        for (std::size_t j = 0; j < screen_words; ++j) zero = zero && acc[j] == 0;
        if (zero) return;
        IntRow v(cols, 0);
        for (unsigned s = 0; s < n; ++s) ++v[windows[s]];
        if (!span.insert(std::move(v)))
            throw std::logic_error("screen and elimination disagree");
        refresh();
    };
    for (unsigned n = 1; n <= max_len; ++n) for_each_necklace(n, process);

    // canonicalize the annihilator the same way the constructive route does,
    // so equal spans yield element-wise equal bases
    return detail::make_basis(k, "empirical", rref_of(nullspace(rref_of(span)), cols).rows);
}

inline bool equal_spans(const InvariantBasis& a, const InvariantBasis& b) {
    if (a.k != b.k) return false;
    std::vector<IntRow> ra, rb;
    for (const auto& f : a.functionals) ra.push_back(f.coeffs);
    for (const auto& f : b.functionals) rb.push_back(f.coeffs);
    const std::size_t cols = std::size_t{1} << a.k;
    return rref_of(ra, cols) == rref_of(rb, cols);
}

// True iff f annihilates the count vector of every circular sequence,
// decided algebraically: membership in the conservation span.
inline bool is_vanishing(const LinearFunctional& f) {
    const Order k(f.k);
    if (f.coeffs.size() != k.pattern_count())
        throw std::invalid_argument("coefficient vector width mismatch");
    return in_span(detail::constructive_rref(k), f.coeffs);
}

// A reversal pair in its reported orientation.
struct ReversalPair {
    PatternId first;
    PatternId second;

    friend bool operator==(const ReversalPair&, const ReversalPair&) = default;
};

struct DifferenceClass {
    std::vector<ReversalPair> pairs;  // oriented so all differences coincide
};

struct RefutedCandidate {
    LinearFunctional functional;
    std::optional<std::string> witness;  // first sequence violating it
};

// Classification of all non-palindromic reversal pairs of order k:
// identically-equal pairs, classes of pairs with a common difference, and a
// recount-verified counterexample for every claim that fails.
struct ReversalReport {
    int k;
    unsigned search_len;
    std::vector<ReversalPair> identical_pairs;
    std::vector<DifferenceClass> classes;
    std::vector<RefutedCandidate> refuted;
};

namespace detail {

inline IntRow pair_functional(PatternId a, PatternId b, std::size_t cols) {
    IntRow f(cols, 0);
    f[a] += 1;
    f[b] -= 1;
    return f;
}

inline IntRow row_sum(const IntRow& a, const IntRow& b, std::int64_t sign) {
    IntRow out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
    return out;
}

// First sequence (lengths ascending, then integer value of the digit string)
// whose count vector the functional does not annihilate.
inline std::optional<std::string> find_witness(const LinearFunctional& f, unsigned search_len) {
    for (int n = 1; n <= static_cast<int>(search_len); ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const auto seq = CircularBitSeq::from_integer(n, v);
            if (f.apply(count_windows(seq, Order(f.k))) != 0) return seq.to_string();
        }
    return std::nullopt;
}

}  // namespace detail

inline ReversalReport reversal_pair_report(Order k, unsigned search_len) {
    if (k.value() < 2 || k.value() > 8)
        throw std::invalid_argument("reversal report supports orders 2 through 8");
    const std::size_t cols = k.pattern_count();
    const Rref invariants = detail::constructive_rref(k);

    ReversalReport report{k.value(), search_len, {}, {}, {}};

    struct PendingPair {
        PatternId lo, hi;   // lo < hi
        IntRow diff;        // e_lo - e_hi
    };
    std::vector<PendingPair> pending;
    for (PatternId p = 0; p < cols; ++p) {
        const PatternId r = reverse_pattern(p, k);
        if (r <= p) continue;  // palindromes and double visits
        IntRow diff = detail::pair_functional(p, r, cols);
        if (in_span(invariants, diff))
            report.identical_pairs.push_back(ReversalPair{p, r});
        else
            pending.push_back(PendingPair{p, r, std::move(diff)});
    }

    // Union-find with orientation: root[i] and the sign relating pair i's
    // lo-first difference to the root's.
    std::vector<std::size_t> parent(pending.size());
    std::vector<std::int64_t> sign(pending.size(), 1);
    for (std::size_t i = 0; i < pending.size(); ++i) parent[i] = i;
    const auto find = [&](std::size_t i) {
        std::int64_t s = 1;
        while (parent[i] != i) {
            s *= sign[i];
            i = parent[i];
        }
        return std::pair<std::size_t, std::int64_t>{i, s};
    };
    for (std::size_t i = 0; i < pending.size(); ++i)
        for (std::size_t j = i + 1; j < pending.size(); ++j) {
            const auto [ri, si] = find(i);
            const auto [rj, sj] = find(j);
            if (ri == rj) continue;
            std::int64_t rel = 0;
            if (in_span(invariants, detail::row_sum(pending[i].diff, pending[j].diff, -1)))
                rel = 1;
            else if (in_span(invariants, detail::row_sum(pending[i].diff, pending[j].diff, 1)))
                rel = -1;
            if (rel != 0) {
                // diff_i = si * diff_ri, diff_j = sj * diff_rj, diff_i = rel * diff_j
                parent[rj] = ri;
                sign[rj] = si * rel * sj;
            }
        }

    // Group by root; class order and in-class order follow the smallest
    // pattern id. The first pair of each class is displayed larger-first
    // (the orientation the tables use), the rest consistently with it.
    std::vector<std::size_t> order(pending.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pending[a].lo < pending[b].lo; });
    std::vector<std::optional<std::size_t>> class_of_root(pending.size());
    std::vector<std::int64_t> first_sign;  // sign-to-root of each class's first member
    for (std::size_t idx : order) {
        const auto [root, s] = find(idx);
        // orientation o = +1 lists (lo, hi); the first member is listed
        // (hi, lo), and diff_i = s_i * diff_root forces o = -s * s_first
        // on the others to keep all displayed differences equal
        std::int64_t o;
        if (!class_of_root[root]) {
            class_of_root[root] = report.classes.size();
            report.classes.push_back({});
            first_sign.push_back(s);
            o = -1;
        } else {
            o = -s * first_sign[*class_of_root[root]];
        }
        auto& cls = report.classes[*class_of_root[root]];
        if (o > 0)
            cls.pairs.push_back(ReversalPair{pending[idx].lo, pending[idx].hi});
        else
            cls.pairs.push_back(ReversalPair{pending[idx].hi, pending[idx].lo});
    }

    // Refuted identity claims: one candidate per classified pair, in its
    // reported orientation.
    for (const auto& cls : report.classes)
        for (const auto& pr : cls.pairs) {
            LinearFunctional f{k.value(), detail::pair_functional(pr.first, pr.second, cols)};
            auto witness = detail::find_witness(f, search_len);
            report.refuted.push_back(RefutedCandidate{std::move(f), std::move(witness)});
        }
    // Refuted cross-class equalities, both orientations.
    for (std::size_t a = 0; a < report.classes.size(); ++a)
        for (std::size_t b = a + 1; b < report.classes.size(); ++b) {
            const auto& pa = report.classes[a].pairs.front();
            const auto& pb = report.classes[b].pairs.front();
            const IntRow fa = detail::pair_functional(pa.first, pa.second, cols);
            const IntRow fb = detail::pair_functional(pb.first, pb.second, cols);
            for (std::int64_t s : {std::int64_t{-1}, std::int64_t{1}}) {
                LinearFunctional f{k.value(), detail::row_sum(fa, fb, s)};
                auto witness = detail::find_witness(f, search_len);
                report.refuted.push_back(RefutedCandidate{std::move(f), std::move(witness)});
            }
        }
    return report;
}

}  // namespace windowlab
