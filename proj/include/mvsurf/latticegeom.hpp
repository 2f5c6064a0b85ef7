/*
   Copyright 2026 The mvsurf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Lattice polygons: hulls, dilates, Ehrhart data, edge chains and the
// monomial bases S_{kQ \ kE_I} built from them.

#ifndef MVSURF_LATTICEGEOM_HPP
#define MVSURF_LATTICEGEOM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "lattice_point.hpp"

namespace mvsurf {

namespace detail {

constexpr std::int64_t cross(LatticePoint o, LatticePoint a, LatticePoint b) {
    return (a.a1 - o.a1) * (b.a2 - o.a2) - (a.a2 - o.a2) * (b.a1 - o.a1);
}

constexpr std::int64_t lattice_length(LatticePoint a, LatticePoint b) {
    return std::gcd(a.a1 > b.a1 ? a.a1 - b.a1 : b.a1 - a.a1, a.a2 > b.a2 ? a.a2 - b.a2 : b.a2 - a.a2);
}

inline std::vector<LatticePoint> sorted_unique(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace detail

// Counterclockwise cycle of extreme points starting at the lexicographically
// least vertex; collinear boundary points are dropped.
inline std::vector<LatticePoint> convex_hull(std::span<const LatticePoint> input) {
    std::vector<LatticePoint> pts = detail::sorted_unique({input.begin(), input.end()});
    if (pts.size() < 3) throw DegeneracyError("convex_hull: fewer than 3 distinct points");
    // Andrew's monotone chain
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw DegeneracyError("convex_hull: points are collinear");
    return hull;
}

// Support A together with its hull Q.
class SupportSpec {
   public:
    explicit SupportSpec(std::vector<LatticePoint> points)
        : points_(detail::sorted_unique(std::move(points))), hull_(convex_hull(points_)) {}

    // Full grid [0,m] x [0,n]: the tensor-product support.
    static SupportSpec rectangle(std::int64_t m, std::int64_t n) {
        std::vector<LatticePoint> pts;
        for (std::int64_t a1 = 0; a1 <= m; ++a1)
            for (std::int64_t a2 = 0; a2 <= n; ++a2) pts.push_back({a1, a2});
        return SupportSpec(std::move(pts));
    }

    // All lattice points of conv{(0,0),(d,0),(0,d)}.
    static SupportSpec triangle(std::int64_t d) {
        std::vector<LatticePoint> pts;
        for (std::int64_t a1 = 0; a1 <= d; ++a1)
            for (std::int64_t a2 = 0; a1 + a2 <= d; ++a2) pts.push_back({a1, a2});
        return SupportSpec(std::move(pts));
    }

    [[nodiscard]] const std::vector<LatticePoint>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<LatticePoint>& hull() const noexcept { return hull_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return hull_.size(); }

    [[nodiscard]] bool contains(LatticePoint p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    // Edge j joins hull[j] to hull[j+1] (cyclically).
    [[nodiscard]] std::pair<LatticePoint, LatticePoint> edge(std::size_t j) const {
        return {hull_[j % hull_.size()], hull_[(j + 1) % hull_.size()]};
    }

    friend bool operator==(const SupportSpec&, const SupportSpec&) = default;

   private:
    std::vector<LatticePoint> points_;
    std::vector<LatticePoint> hull_;
};

// A contiguous run of hull edges: edges start, start+1, ..., start+edge_count-1.
struct EdgeChain {
    std::size_t start = 0;  // 0-based hull vertex
    std::size_t edge_count = 1;

    friend bool operator==(const EdgeChain&, const EdgeChain&) = default;

    // External syntax ("start:edges", JSON) numbers hull vertices from 1.
    static EdgeChain from_one_based(std::int64_t start, std::int64_t edges) {
        if (start < 1) throw ConstraintError("chain start must be >= 1 (vertices are numbered from 1)");
        if (edges < 1) throw ConstraintError("chain must contain at least one edge");
        return {static_cast<std::size_t>(start - 1), static_cast<std::size_t>(edges)};
    }

    void validate(const SupportSpec& spec) const {
        if (start >= spec.edge_count())
            throw ConstraintError("chain start vertex " + std::to_string(start + 1) + " exceeds hull size " +
                                  std::to_string(spec.edge_count()));
        if (edge_count < 1 || edge_count > spec.edge_count())
            throw ConstraintError("chain edge count " + std::to_string(edge_count) + " outside [1, " +
                                  std::to_string(spec.edge_count()) + "]");
    }
};

// The chain through (m,n) on the rectangle [0,m]x[0,n]: right edge then top edge.
inline EdgeChain top_right_chain() { return {1, 2}; }

// Exact rational with positive denominator, kept reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;

    [[nodiscard]] std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num, den);
    if (den < 0) return {-num / g, -den / g};
    return {num / g, den / g};
}

// E(t) = A t^2 + (B/2) t + 1 for Q, and B_I t + 1 for the chain.
struct EhrhartData {
    Rational A;              // Euclidean area of Q
    std::int64_t B = 0;      // boundary lattice points of Q
    std::int64_t B_I = 0;    // lattice length of the chain

    [[nodiscard]] std::int64_t twice_area() const { return 2 * A.num / A.den; }

    // #(kQ cap Z^2)
    [[nodiscard]] std::int64_t dilate_count(std::int64_t k) const { return (twice_area() * k * k + B * k + 2) / 2; }
    // #(kE_I cap Z^2)
    [[nodiscard]] std::int64_t chain_count(std::int64_t k) const { return k * B_I + 1; }
    // #((kQ \ kE_I) cap Z^2)
    [[nodiscard]] std::int64_t basis_count(std::int64_t k) const { return dilate_count(k) - chain_count(k); }
};

inline EhrhartData ehrhart(const SupportSpec& spec, const EdgeChain& chain) {
    chain.validate(spec);
    const auto& h = spec.hull();
    std::int64_t twice = 0;
    std::int64_t boundary = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        const auto [v, w] = spec.edge(j);
        twice += v.a1 * w.a2 - w.a1 * v.a2;
        boundary += detail::lattice_length(v, w);
    }
    std::int64_t chain_len = 0;
    for (std::size_t j = 0; j < chain.edge_count; ++j) {
        const auto [v, w] = spec.edge(chain.start + j);
        chain_len += detail::lattice_length(v, w);
    }
    return {make_rational(twice, 2), boundary, chain_len};
}

// Lattice points of kQ, ascending lexicographic.
inline std::vector<LatticePoint> lattice_points_in_dilate(const SupportSpec& spec, std::int64_t k) {
    if (k < 1) throw ConstraintError("dilation factor must be >= 1");
    std::vector<LatticePoint> hull;
    for (const auto& v : spec.hull()) hull.push_back(k * v);
    auto [lo1, hi1] = std::minmax_element(hull.begin(), hull.end(), [](auto p, auto q) { return p.a1 < q.a1; });
    auto [lo2, hi2] = std::minmax_element(hull.begin(), hull.end(), [](auto p, auto q) { return p.a2 < q.a2; });
    std::vector<LatticePoint> out;
    for (std::int64_t a1 = lo1->a1; a1 <= hi1->a1; ++a1) {
        for (std::int64_t a2 = lo2->a2; a2 <= hi2->a2; ++a2) {
            const LatticePoint p{a1, a2};
            bool inside = true;
            for (std::size_t j = 0; j < hull.size() && inside; ++j)
                inside = detail::cross(hull[j], hull[(j + 1) % hull.size()], p) >= 0;
            if (inside) out.push_back(p);
        }
    }
    return out;
}

// Lattice points on the polyline k*E_I, ascending lexicographic.
inline std::vector<LatticePoint> chain_points_in_dilate(const SupportSpec& spec, const EdgeChain& chain,
                                                        std::int64_t k) {
    if (k < 1) throw ConstraintError("dilation factor must be >= 1");
    chain.validate(spec);
    std::vector<LatticePoint> out;
    for (std::size_t j = 0; j < chain.edge_count; ++j) {
        const auto [v0, w0] = spec.edge(chain.start + j);
        const LatticePoint v = k * v0, w = k * w0;
        const std::int64_t g = detail::lattice_length(v, w);
        const LatticePoint step{(w.a1 - v.a1) / g, (w.a2 - v.a2) / g};
        for (std::int64_t s = 0; s <= g; ++s) out.push_back(v + s * step);
    }
    return detail::sorted_unique(std::move(out));
}

// Exponents of S_{kQ \ kE_I}: dilate points minus chain points, ascending lex.
inline std::vector<LatticePoint> support_basis(const SupportSpec& spec, const EdgeChain& chain, std::int64_t k) {
    const auto all = lattice_points_in_dilate(spec, k);
    const auto removed = chain_points_in_dilate(spec, chain, k);
    std::vector<LatticePoint> out;
    std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(), std::back_inserter(out));
    return out;
}

// ---------------------------------------------------------------------------
// Support files: {"points": [[a1,a2],...], "chain": {"start": i, "edges": e}}
// with chain.start numbered from 1 along the hull cycle.

struct SupportFile {
    SupportSpec spec;
    std::optional<EdgeChain> chain;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline SupportFile parse_support_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("support JSON: " + detail::line_col(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError("support JSON: expected an object with a \"points\" array");
    std::vector<LatticePoint> pts;
    for (std::size_t k = 0; k < j["points"].size(); ++k) {
        const auto& p = j["points"][k];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw ParseError("support JSON: points[" + std::to_string(k) + "] is not an integer pair");
        pts.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
    SupportFile out{SupportSpec(std::move(pts)), std::nullopt};
    if (j.contains("chain")) {
        const auto& c = j["chain"];
        if (!c.is_object() || !c.contains("start") || !c.contains("edges") || !c["start"].is_number_integer() ||
            !c["edges"].is_number_integer())
            throw ParseError("support JSON: \"chain\" must be {\"start\": int, \"edges\": int}");
        out.chain = EdgeChain::from_one_based(c["start"].get<std::int64_t>(), c["edges"].get<std::int64_t>());
        out.chain->validate(out.spec);
    }
    return out;
}

inline nlohmann::json to_json(const SupportSpec& spec, const std::optional<EdgeChain>& chain = std::nullopt) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : spec.points()) j["points"].push_back({p.a1, p.a2});
    if (chain) j["chain"] = {{"start", chain->start + 1}, {"edges", chain->edge_count}};
    return j;
}

// "start:edges", 1-based start.
inline EdgeChain parse_chain(const std::string& s) {
    static const std::regex re(R"(\s*(\d+)\s*:\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ParseError("chain '" + s + "': expected start:edges");
    return EdgeChain::from_one_based(std::stoll(m[1]), std::stoll(m[2]));
}

// "(1,0),(0,1)"; the empty string is the empty list.
inline std::vector<LatticePoint> parse_point_list(const std::string& s) {
    static const std::regex item(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    static const std::regex whole(R"(\s*(\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*(,\s*\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*)*)?)");
    if (!std::regex_match(s, whole)) throw ParseError("point list '" + s + "': expected (a1,a2),(a1,a2),...");
    std::vector<LatticePoint> out;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), item); it != std::sregex_iterator(); ++it)
        out.push_back({std::stoll((*it)[1]), std::stoll((*it)[2])});
    return out;
}

}  // namespace mvsurf

#endif  // MVSURF_LATTICEGEOM_HPP
