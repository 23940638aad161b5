#pragma once

#include <string>

#include <json.hpp>

#include "windowlab/counting.hpp"
#include "windowlab/discovery.hpp"
#include "windowlab/tablegen.hpp"
#include "windowlab/theorem.hpp"

namespace windowlab {

// Insertion-ordered JSON keeps every emission byte-stable.
using Json = nlohmann::ordered_json;

inline Json json_of(const CountVector& cv) {
    Json counts = Json::object();
    for (PatternId p = 0; p < cv.counts.size(); ++p)
        counts[pattern_text(p, Order(cv.k))] = cv.counts[p];
    return Json{{"k", cv.k}, {"n", cv.n}, {"counts", std::move(counts)}};
}

inline std::string tsv_of(const CountVector& cv) {
    std::string out = "pattern\tcount\n";
    for (PatternId p = 0; p < cv.counts.size(); ++p)
        out += pattern_text(p, Order(cv.k)) + '\t' + std::to_string(cv.counts[p]) + '\n';
    return out;
}

inline Json json_of(const DifferenceReport& r) {
    Json diffs = Json::object();
    for (std::size_t i = 0; i < 4; ++i)
        diffs[pattern_text(tracked_pairs[i][0], Order(4)) + "-" +
              pattern_text(tracked_pairs[i][1], Order(4))] = r.diffs.d[i];
    Json j{{"sequence", r.subject.to_string()},
           {"n", r.subject.size()},
           {"holds", r.holds},
           {"differences", std::move(diffs)}};
    if (r.t) j["t"] = *r.t;
    return j;
}

inline Json json_of(const SweepReport& r) {
    Json hist = Json::object();
    for (const auto& [t, count] : r.t_histogram) hist[std::to_string(t)] = count;
    return Json{{"n_min", r.n_min},
                {"n_max", r.n_max},
                {"checked", r.checked},
                {"violations", r.violations},
                {"t_histogram", std::move(hist)}};
}

inline Json json_of(const BoundaryContext& ctx, const WindowDelta& d) {
    Json lost = Json::array();
    for (auto w : d.lost) lost.push_back(pattern_text(w, Order(4)));
    Json gained = Json::array();
    for (auto w : d.gained) gained.push_back(pattern_text(w, Order(4)));
    Json net = Json::object();
    for (PatternId p = 0; p < 16; ++p) net[pattern_text(p, Order(4))] = d.net[p];
    Json j{{"context", ctx.p_text()},
           {"appended", static_cast<int>(ctx.appended)},
           {"extended", ctx.extended_text()},
           {"lost", std::move(lost)},
           {"gained", std::move(gained)},
           {"net", std::move(net)}};
    if (d.delta_difference)
        j["delta_difference"] = *d.delta_difference;
    else
        j["delta_difference"] = nullptr;
    return j;
}

inline Json json_of(const LinearFunctional& f) {
    Json coeffs = Json::object();
    for (std::size_t p = 0; p < f.coeffs.size(); ++p)
        if (f.coeffs[p] != 0)
            coeffs[pattern_text(static_cast<PatternId>(p), Order(f.k))] = f.coeffs[p];
    return Json{{"coeffs", std::move(coeffs)}};
}

inline Json json_of(const InvariantBasis& b) {
    Json fs = Json::array();
    for (const auto& f : b.functionals) fs.push_back(json_of(f));
    return Json{
        {"k", b.k}, {"rank", b.rank()}, {"method", b.method}, {"functionals", std::move(fs)}};
}

inline Json json_of(const ReversalReport& r) {
    const Order k(r.k);
    Json identical = Json::array();
    for (const auto& p : r.identical_pairs)
        identical.push_back(Json::array({pattern_text(p.first, k), pattern_text(p.second, k)}));
    Json classes = Json::array();
    for (const auto& cls : r.classes) {
        Json pairs = Json::array();
        for (const auto& p : cls.pairs)
            pairs.push_back(Json::array({pattern_text(p.first, k), pattern_text(p.second, k)}));
        classes.push_back(std::move(pairs));
    }
    Json refuted = Json::object();
    for (const auto& c : r.refuted)
        refuted[c.functional.to_string()] = c.witness ? Json(*c.witness) : Json(nullptr);
    return Json{{"k", r.k},
                {"search_len", r.search_len},
                {"identical_pairs", std::move(identical)},
                {"equal_difference_classes", std::move(classes)},
                {"counterexamples", std::move(refuted)}};
}

inline Json json_of(const ValidationReport& r) {
    Json diffs = Json::array();
    for (const auto& d : r.published_diffs)
        diffs.push_back(Json{{"table", d.table},
                             {"row", d.key},
                             {"column", d.column},
                             {"published", d.published},
                             {"generated", d.generated}});
    return Json{{"tables_consistent", r.tables_consistent},
                {"realizations_checked", r.realizations_checked},
                {"oracle_failures", r.oracle_failures},
                {"published_diffs", std::move(diffs)}};
}

}  // namespace windowlab
