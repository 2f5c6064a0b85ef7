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

#ifndef MVSURF_EXACTALG_UNI_POLY_HPP
#define MVSURF_EXACTALG_UNI_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "field_matrix.hpp"
#include "prime_field.hpp"

namespace mvsurf {

// Dense polynomial in t over F_p, lowest degree first. The top coefficient is
// nonzero unless the polynomial is zero (empty coefficient list).
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<u64> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<u64> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly constant(u64 v) { return UniPoly{std::vector<u64>{v}}; }
    static UniPoly monomial(u64 v, std::size_t k) {
        std::vector<u64> c(k + 1, 0);
        c[k] = v;
        return UniPoly{std::move(c)};
    }

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] u64 coefficient(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
    [[nodiscard]] const std::vector<u64>& coefficients() const noexcept { return c_; }

    // Lowest exponent with nonzero coefficient; nullopt for zero.
    [[nodiscard]] std::optional<std::size_t> valuation() const noexcept {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return k;
        return std::nullopt;
    }

    [[nodiscard]] u64 eval(const PrimeField& F, u64 t) const noexcept {
        u64 acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F.add(F.mul(acc, t), *it);
        return acc;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<u64> c_;
};

inline UniPoly add(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
    std::vector<u64> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = F.add(a.coefficient(k), b.coefficient(k));
    return UniPoly{std::move(c)};
}

inline UniPoly sub(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
    std::vector<u64> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = F.sub(a.coefficient(k), b.coefficient(k));
    return UniPoly{std::move(c)};
}

inline UniPoly mul(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<u64> c(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(x[i], y[j]));
    }
    return UniPoly{std::move(c)};
}

inline UniPoly scale(const PrimeField& F, const UniPoly& a, u64 s) {
    std::vector<u64> c = a.coefficients();
    for (auto& v : c) v = F.mul(v, s);
    return UniPoly{std::move(c)};
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const u64 v = p.coefficient(k);
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << v;
        if (k > 0) os << "*t";
        if (k > 1) os << "^" << k;
    }
    return os;
}

// Dense row-major matrix of UniPoly entries, same labelling scheme as FieldMatrix.
struct UniPolyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<UniPoly> entries;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    UniPolyMatrix() = default;
    UniPolyMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c), row_labels(r), col_labels(c) {}

    [[nodiscard]] UniPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    [[nodiscard]] const UniPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    [[nodiscard]] long max_entry_degree() const noexcept {
        long d = -1;
        for (const auto& e : entries) d = std::max(d, e.degree());
        return d;
    }

    [[nodiscard]] FieldMatrix evaluate(const PrimeField& F, u64 t) const {
        FieldMatrix out(rows, cols);
        out.row_labels = row_labels;
        out.col_labels = col_labels;
        for (std::size_t k = 0; k < entries.size(); ++k) out.entries[k] = entries[k].eval(F, t);
        return out;
    }
};

// Newton interpolation through (x_k, y_k), converted to monomial form.
inline UniPoly interpolate(const PrimeField& F, const std::vector<u64>& xs, std::vector<u64> ys) {
    const std::size_t n = xs.size();
    // divided differences in place
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            const u64 denom = F.sub(xs[i], xs[i - j]);
            ys[i] = F.mul(F.sub(ys[i], ys[i - 1]), F.inv(denom));
            if (i == j) break;
        }
    }
    // Horner over the Newton basis: p = y0 + (t-x0)(y1 + (t-x1)(y2 + ...))
    std::vector<u64> acc;
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc * (t - x_i) + ys[i]
        std::vector<u64> next(acc.size() + 1, 0);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] = F.add(next[k + 1], acc[k]);
            next[k] = F.sub(next[k], F.mul(acc[k], xs[i]));
        }
        next[0] = F.add(next[0], ys[i]);
        acc = std::move(next);
    }
    return UniPoly{std::move(acc)};
}

// det(M) as a polynomial in t: evaluate at t = 0..degree_bound, take ff_det of
// each evaluation, interpolate. Needs p > degree_bound so the nodes are distinct.
inline UniPoly upoly_det(const PrimeField& F, const UniPolyMatrix& M, std::size_t degree_bound) {
    if (M.rows != M.cols) {
        throw DimensionError("upoly_det: matrix is " + std::to_string(M.rows) + "x" +
                             std::to_string(M.cols));
    }
    if (F.modulus() <= degree_bound) {
        throw ModulusError("upoly_det: p=" + std::to_string(F.modulus()) +
                           " too small to interpolate degree " + std::to_string(degree_bound));
    }
    const long max_deg = std::max(M.max_entry_degree(), 0L);
    if (degree_bound < M.rows * static_cast<std::size_t>(max_deg)) {
        throw ConstraintError("upoly_det: degree_bound " + std::to_string(degree_bound) +
                              " below n * max entry degree = " +
                              std::to_string(M.rows * static_cast<std::size_t>(max_deg)));
    }
    std::vector<u64> xs(degree_bound + 1), ys(degree_bound + 1);
    for (std::size_t k = 0; k <= degree_bound; ++k) {
        xs[k] = k;
        ys[k] = ff_det(F, M.evaluate(F, k));
    }
    return interpolate(F, xs, std::move(ys));
}

}  // namespace mvsurf

#endif  // MVSURF_EXACTALG_UNI_POLY_HPP
