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

// Coefficient-matrix templates of the moving-plane and moving-quadric maps.
//
// A template row is a basis element x^s * F_i (or x^s * F_i F_j) of the
// domain; a column is a monomial x^b of the target. Rows are ordered with the
// shift s outer (ascending lex) and the factor index inner; columns ascend lex.

#ifndef MVSURF_BUILDERS_HPP
#define MVSURF_BUILDERS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exactalg.hpp"
#include "lattice_point.hpp"
#include "latticegeom.hpp"

namespace mvsurf {

struct LinearRow {
    int i = 1;
    LatticePoint shift;
    friend constexpr auto operator<=>(const LinearRow&, const LinearRow&) = default;
};

struct QuadricPair {
    int i = 1;
    int j = 1;
    friend constexpr auto operator<=>(const QuadricPair&, const QuadricPair&) = default;
};

struct QuadricRow {
    QuadricPair pair;
    LatticePoint shift;
    friend constexpr auto operator<=>(const QuadricRow&, const QuadricRow&) = default;
};

// A_1..A_9 of the tensor-product quadric map, in order.
inline constexpr std::array<QuadricPair, 9> kTensorQuadricPairs{
    {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// The nine above followed by F_4^2.
inline constexpr std::array<QuadricPair, 10> kGeneralQuadricPairs{
    {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 4}}};

inline std::string to_string(const LinearRow& r) { return "x^" + to_string(r.shift) + "*F" + std::to_string(r.i); }

inline std::string to_string(const QuadricRow& r) {
    const std::string f = r.pair.i == r.pair.j
                              ? "F" + std::to_string(r.pair.i) + "^2"
                              : "F" + std::to_string(r.pair.i) + "F" + std::to_string(r.pair.j);
    return "x^" + to_string(r.shift) + "*" + f;
}

inline std::string monomial_label(const LatticePoint& b) { return "x^" + to_string(b); }

// entry(r = (i,s), c = b) = c_{i, b-s} when b-s is in the support, else zero.
struct LinearTemplate {
    std::vector<LatticePoint> support;
    std::vector<LinearRow> row_labels;
    std::vector<LatticePoint> col_labels;
    std::vector<std::optional<CoefficientIndex>> entries;

    [[nodiscard]] std::size_t rows() const noexcept { return row_labels.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return col_labels.size(); }
    [[nodiscard]] bool square() const noexcept { return rows() == cols(); }
    [[nodiscard]] const std::optional<CoefficientIndex>& entry(std::size_t r, std::size_t c) const {
        return entries[r * cols() + c];
    }

    friend bool operator==(const LinearTemplate&, const LinearTemplate&) = default;
};

// One product c_{i,u} * c_{j,v}.
struct QuadTerm {
    CoefficientIndex lhs;
    CoefficientIndex rhs;
    friend constexpr auto operator<=>(const QuadTerm&, const QuadTerm&) = default;
};

// entry(r = ((i,j),s), c = b) = sum of c_{i,u} c_{j,v} over ordered pairs
// u + v = b - s with u, v in the support: the coefficient of x^b in x^s F_i F_j.
struct QuadricTemplate {
    std::vector<LatticePoint> support;
    std::vector<QuadricRow> row_labels;
    std::vector<LatticePoint> col_labels;
    std::vector<std::vector<QuadTerm>> entries;

    [[nodiscard]] std::size_t rows() const noexcept { return row_labels.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return col_labels.size(); }
    [[nodiscard]] bool square() const noexcept { return rows() == cols(); }
    [[nodiscard]] const std::vector<QuadTerm>& entry(std::size_t r, std::size_t c) const {
        return entries[r * cols() + c];
    }

    friend bool operator==(const QuadricTemplate&, const QuadricTemplate&) = default;
};

// The index set I: domain monomials whose F_4 rows are deleted.
struct DeletionSpec {
    std::vector<LatticePoint> index_set;
    friend bool operator==(const DeletionSpec&, const DeletionSpec&) = default;
};

namespace detail {

inline std::map<LatticePoint, std::size_t> index_of(const std::vector<LatticePoint>& pts) {
    std::map<LatticePoint, std::size_t> idx;
    for (std::size_t k = 0; k < pts.size(); ++k) idx.emplace(pts[k], k);
    return idx;
}

inline std::vector<LatticePoint> grid(std::int64_t max1, std::int64_t max2) {
    std::vector<LatticePoint> out;
    for (std::int64_t a1 = 0; a1 <= max1; ++a1)
        for (std::int64_t a2 = 0; a2 <= max2; ++a2) out.push_back({a1, a2});
    return out;
}

inline LinearTemplate build_linear(const std::vector<LatticePoint>& support, const std::vector<LatticePoint>& domain,
                                   const std::vector<LatticePoint>& target, const std::set<LinearRow>& deleted) {
    LinearTemplate t;
    t.support = support;
    t.col_labels = target;
    for (const auto& s : domain)
        for (int i = 1; i <= 4; ++i)
            if (!deleted.contains({i, s})) t.row_labels.push_back({i, s});
    const auto col = index_of(target);
    t.entries.assign(t.rows() * t.cols(), std::nullopt);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto& [i, s] = t.row_labels[r];
        for (const auto& a : support) {
            const auto it = col.find(s + a);
            if (it == col.end())
                throw InternalError("x^" + to_string(s) + "*F" + std::to_string(i) + " leaves the target basis at " +
                                    to_string(s + a));
            t.entries[r * t.cols() + it->second] = CoefficientIndex{i, a};
        }
    }
    return t;
}

template <std::size_t N>
QuadricTemplate build_quadric(const std::vector<LatticePoint>& support, const std::vector<LatticePoint>& domain,
                              const std::vector<LatticePoint>& target, const std::array<QuadricPair, N>& pairs,
                              const std::set<QuadricRow>& deleted) {
    QuadricTemplate t;
    t.support = support;
    t.col_labels = target;
    for (const auto& s : domain)
        for (const auto& pr : pairs)
            if (!deleted.contains({pr, s})) t.row_labels.push_back({pr, s});
    const auto col = index_of(target);
    t.entries.assign(t.rows() * t.cols(), {});
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto& [pr, s] = t.row_labels[r];
        for (const auto& u : support) {
            for (const auto& v : support) {
                const auto it = col.find(s + u + v);
                if (it == col.end())
                    throw InternalError(to_string(t.row_labels[r]) + " leaves the target basis at " +
                                        to_string(s + u + v));
                t.entries[r * t.cols() + it->second].push_back({{pr.i, u}, {pr.j, v}});
            }
        }
    }
    return t;
}

inline void require_positive_bidegree(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1)
        throw ConstraintError("bidegree (" + std::to_string(m) + "," + std::to_string(n) + ") must be positive");
}

}  // namespace detail

// F_{m,n}: S_{m-1,n-1}^4 -> S_{2m-1,2n-1}, square of size 4mn.
inline LinearTemplate build_F_tensor(std::int64_t m, std::int64_t n) {
    detail::require_positive_bidegree(m, n);
    return detail::build_linear(detail::grid(m, n), detail::grid(m - 1, n - 1), detail::grid(2 * m - 1, 2 * n - 1),
                                {});
}

// Q_{m,n}: S_{m-1,n-1}^9 -> S_{3m-1,3n-1}, square of size 9mn.
inline QuadricTemplate build_Q_tensor(std::int64_t m, std::int64_t n) {
    detail::require_positive_bidegree(m, n);
    return detail::build_quadric(detail::grid(m, n), detail::grid(m - 1, n - 1), detail::grid(3 * m - 1, 3 * n - 1),
                                 kTensorQuadricPairs, {});
}

// Counting data shared by the general builders.
struct GeneralLayout {
    EhrhartData ehrhart;
    std::vector<LatticePoint> domain;  // S_{Q \ E_I}
    std::int64_t deletion_size = 0;    // B - 2 B_I
    std::int64_t F_order = 0;          // 4A + B - 2B_I
    std::int64_t Q_order = 0;          // 9A + 3B/2 - 3B_I
};

inline GeneralLayout general_layout(const SupportSpec& spec, const EdgeChain& chain) {
    GeneralLayout L;
    L.ehrhart = ehrhart(spec, chain);
    const auto& e = L.ehrhart;
    if (e.B < 2 * e.B_I)
        throw ConstraintError("chain too long: B=" + std::to_string(e.B) + " < 2*B_I=" + std::to_string(2 * e.B_I));
    L.domain = support_basis(spec, chain, 1);
    L.deletion_size = e.B - 2 * e.B_I;
    L.F_order = 2 * e.twice_area() + e.B - 2 * e.B_I;
    // 9A + 3B/2 - 3B_I, with 2A = twice_area
    const std::int64_t twice_q = 9 * e.twice_area() + 3 * e.B - 6 * e.B_I;
    L.Q_order = twice_q % 2 == 0 ? twice_q / 2 : -1;
    return L;
}

namespace detail {

inline std::vector<LatticePoint> validate_deletion(const GeneralLayout& L, const DeletionSpec& deletion) {
    auto I = deletion.index_set;
    std::sort(I.begin(), I.end());
    if (std::adjacent_find(I.begin(), I.end()) != I.end())
        throw ConstraintError("index set contains a repeated point");
    if (static_cast<std::int64_t>(I.size()) != L.deletion_size)
        throw ConstraintError("index set has " + std::to_string(I.size()) + " points, need B-2B_I=" +
                              std::to_string(L.deletion_size));
    for (const auto& a : I)
        if (!std::binary_search(L.domain.begin(), L.domain.end(), a))
            throw ConstraintError("index point " + to_string(a) + " is not in (Q \\ E_I) cap Z^2");
    return I;
}

}  // namespace detail

// F_{A,I}: rows x^s F_i for s in S_{Q\E_I}, minus x^a F_4 for a in I;
// columns S_{2Q\2E_I}. Square of order 4A + B - 2B_I.
inline LinearTemplate build_F_general(const SupportSpec& spec, const EdgeChain& chain, const DeletionSpec& deletion) {
    const auto L = general_layout(spec, chain);
    const auto I = detail::validate_deletion(L, deletion);
    std::set<LinearRow> deleted;
    for (const auto& a : I) deleted.insert({4, a});
    auto t = detail::build_linear(spec.points(), L.domain, support_basis(spec, chain, 2), deleted);
    if (!t.square() || static_cast<std::int64_t>(t.rows()) != L.F_order)
        throw InternalError("F_{A,I} is " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                            ", expected order " + std::to_string(L.F_order));
    return t;
}

// Q_{A,I}: ten pair blocks over S_{Q\E_I}, minus every F_4^2 row and the rows
// x^a F_iF_4 (i = 1,2,3) for a in I; columns S_{3Q\3E_I}.
// Square of order 9A + 3B/2 - 3B_I.
inline QuadricTemplate build_Q_general(const SupportSpec& spec, const EdgeChain& chain, const DeletionSpec& deletion) {
    const auto L = general_layout(spec, chain);
    if (L.Q_order < 0)
        throw ConstraintError("3B/2 - 3B_I is not an integer (B=" + std::to_string(L.ehrhart.B) +
                              ", B_I=" + std::to_string(L.ehrhart.B_I) + ")");
    const auto I = detail::validate_deletion(L, deletion);
    std::set<QuadricRow> deleted;
    for (const auto& s : L.domain) deleted.insert({{4, 4}, s});
    for (const auto& a : I)
        for (int i = 1; i <= 3; ++i) deleted.insert({{i, 4}, a});
    auto t = detail::build_quadric(spec.points(), L.domain, support_basis(spec, chain, 3), kGeneralQuadricPairs,
                                   deleted);
    if (!t.square() || static_cast<std::int64_t>(t.rows()) != L.Q_order)
        throw InternalError("Q_{A,I} is " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                            ", expected order " + std::to_string(L.Q_order));
    return t;
}

// The 4x4 matrix of corner coefficients, columns (0,0), (m,0), (0,n), (m,n).
inline LinearTemplate corner_template(std::int64_t m, std::int64_t n) {
    detail::require_positive_bidegree(m, n);
    LinearTemplate t;
    t.support = detail::grid(m, n);
    t.col_labels = {{0, 0}, {m, 0}, {0, n}, {m, n}};
    for (int i = 1; i <= 4; ++i) t.row_labels.push_back({i, {0, 0}});
    for (int i = 1; i <= 4; ++i)
        for (const auto& b : t.col_labels) t.entries.push_back(CoefficientIndex{i, b});
    return t;
}

inline bool is_corner(const LatticePoint& a, std::int64_t m, std::int64_t n) {
    return (a.a1 == 0 || a.a1 == m) && (a.a2 == 0 || a.a2 == n);
}

// ---------------------------------------------------------------------------
// Deletion sets for scanning

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

// All k-subsets of domain in lexicographic order of positions.
inline std::vector<DeletionSpec> all_deletions(const std::vector<LatticePoint>& domain, std::size_t k) {
    std::vector<DeletionSpec> out;
    if (k > domain.size()) return out;
    std::vector<std::size_t> pos(k);
    for (std::size_t j = 0; j < k; ++j) pos[j] = j;
    while (true) {
        DeletionSpec d;
        for (auto p : pos) d.index_set.push_back(domain[p]);
        out.push_back(std::move(d));
        std::size_t j = k;
        while (j > 0 && pos[j - 1] == domain.size() - k + j - 1) --j;
        if (j == 0) break;
        ++pos[j - 1];
        for (std::size_t q = j; q < k; ++q) pos[q] = pos[q - 1] + 1;
    }
    return out;
}

// `count` distinct k-subsets drawn uniformly by rejection, returned sorted by
// position vector so the output is independent of draw order.
template <class URBG>
std::vector<DeletionSpec> sample_deletions(const std::vector<LatticePoint>& domain, std::size_t k, std::size_t count,
                                           URBG& rng) {
    std::set<std::vector<std::size_t>> picked;
    const std::uint64_t total = binomial(domain.size(), k);
    count = static_cast<std::size_t>(std::min<std::uint64_t>(count, total));
    std::vector<std::size_t> idx(domain.size());
    while (picked.size() < count) {
        for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
        // partial Fisher-Yates with explicit reduction (portable across standard libraries)
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint64_t span = idx.size() - j;
            const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
            std::uint64_t x;
            do x = rng(); while (x >= limit);
            std::swap(idx[j], idx[j + x % span]);
        }
        std::vector<std::size_t> sel(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(sel.begin(), sel.end());
        picked.insert(std::move(sel));
    }
    std::vector<DeletionSpec> out;
    for (const auto& sel : picked) {
        DeletionSpec d;
        for (auto p : sel) d.index_set.push_back(domain[p]);
        out.push_back(std::move(d));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient assignments and specialization

// Values for c_{i,a}, i in 1..4, a in the support. V is u64 (an F_p residue)
// or UniPoly (a t-specialization).
template <class V>
class CoefficientAssignment {
   public:
    explicit CoefficientAssignment(std::vector<LatticePoint> support)
        : support_(detail::sorted_unique(std::move(support))), values_(4 * support_.size()) {}

    [[nodiscard]] const std::vector<LatticePoint>& support() const noexcept { return support_; }

    void set(const CoefficientIndex& c, V v) { values_[slot(c)] = std::move(v); }

    [[nodiscard]] bool has(const CoefficientIndex& c) const { return values_[slot(c)].has_value(); }

    [[nodiscard]] const V& get(const CoefficientIndex& c) const {
        const auto& v = values_[slot(c)];
        if (!v) throw IncompletenessError("no value assigned to " + to_string(c));
        return *v;
    }

    [[nodiscard]] bool total() const {
        return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
    }

    // Every index of {1..4} x support, in (i, a1, a2) order.
    [[nodiscard]] std::vector<CoefficientIndex> indices() const {
        std::vector<CoefficientIndex> out;
        for (int i = 1; i <= 4; ++i)
            for (const auto& a : support_) out.push_back({i, a});
        return out;
    }

   private:
    [[nodiscard]] std::size_t slot(const CoefficientIndex& c) const {
        const auto it = std::lower_bound(support_.begin(), support_.end(), c.a);
        if (c.i < 1 || c.i > 4 || it == support_.end() || *it != c.a)
            throw ConstraintError(to_string(c) + " is outside the coefficient universe");
        return static_cast<std::size_t>(c.i - 1) * support_.size() + static_cast<std::size_t>(it - support_.begin());
    }

    std::vector<LatticePoint> support_;
    std::vector<std::optional<V>> values_;
};

namespace detail {

template <class Tmpl, class M>
void copy_labels(const Tmpl& t, M& out) {
    for (std::size_t r = 0; r < t.rows(); ++r) out.row_labels[r] = to_string(t.row_labels[r]);
    for (std::size_t c = 0; c < t.cols(); ++c) out.col_labels[c] = monomial_label(t.col_labels[c]);
}

}  // namespace detail

inline FieldMatrix specialize(const LinearTemplate& t, const CoefficientAssignment<u64>& a, const PrimeField& F) {
    FieldMatrix out(t.rows(), t.cols());
    detail::copy_labels(t, out);
    for (std::size_t k = 0; k < t.entries.size(); ++k)
        if (t.entries[k]) out.entries[k] = F.from_uint(a.get(*t.entries[k]));
    return out;
}

inline UniPolyMatrix specialize(const LinearTemplate& t, const CoefficientAssignment<UniPoly>& a,
                                const PrimeField&) {
    UniPolyMatrix out(t.rows(), t.cols());
    detail::copy_labels(t, out);
    for (std::size_t k = 0; k < t.entries.size(); ++k)
        if (t.entries[k]) out.entries[k] = a.get(*t.entries[k]);
    return out;
}

inline FieldMatrix specialize(const QuadricTemplate& t, const CoefficientAssignment<u64>& a, const PrimeField& F) {
    FieldMatrix out(t.rows(), t.cols());
    detail::copy_labels(t, out);
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
        u64 acc = 0;
        for (const auto& term : t.entries[k])
            acc = F.add(acc, F.mul(F.from_uint(a.get(term.lhs)), F.from_uint(a.get(term.rhs))));
        out.entries[k] = acc;
    }
    return out;
}

// Entries become the generic symbols themselves, over the universe
// {1..4} x support.
inline IntPolyMatrix to_symbolic(const LinearTemplate& t) {
    std::vector<CoefficientIndex> vars;
    for (int i = 1; i <= 4; ++i)
        for (const auto& a : t.support) vars.push_back({i, a});
    const auto u = IntMultiPoly::make_universe(std::move(vars));
    IntPolyMatrix M{t.rows(), t.cols(), {}};
    M.entries.reserve(t.entries.size());
    for (const auto& e : t.entries)
        M.entries.push_back(e ? IntMultiPoly::variable(u, *e) : IntMultiPoly(u));
    return M;
}

}  // namespace mvsurf

#endif  // MVSURF_BUILDERS_HPP
