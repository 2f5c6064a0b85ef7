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

#ifndef MVSURF_EXACTALG_INT_MULTI_POLY_HPP
#define MVSURF_EXACTALG_INT_MULTI_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "../lattice_point.hpp"
#include "prime_field.hpp"

namespace mvsurf {

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in the c_{ia} with arbitrary-precision integer
// coefficients. All polynomials combined by an operation must share the same
// variable universe (a sorted list of CoefficientIndex); an exponent vector has
// one slot per universe variable. Zero coefficients are never stored.
class IntMultiPoly {
   public:
    using Universe = std::vector<CoefficientIndex>;
    using Exponents = std::vector<unsigned>;

    explicit IntMultiPoly(std::shared_ptr<const Universe> universe) : u_(std::move(universe)) {}

    static std::shared_ptr<const Universe> make_universe(std::vector<CoefficientIndex> vars) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return std::make_shared<const Universe>(std::move(vars));
    }

    static IntMultiPoly constant(std::shared_ptr<const Universe> u, const BigInt& c) {
        IntMultiPoly p(std::move(u));
        if (c != 0) p.terms_.emplace(Exponents(p.u_->size(), 0), c);
        return p;
    }

    static IntMultiPoly variable(std::shared_ptr<const Universe> u, const CoefficientIndex& v) {
        IntMultiPoly p(std::move(u));
        const auto it = std::lower_bound(p.u_->begin(), p.u_->end(), v);
        if (it == p.u_->end() || *it != v) throw std::out_of_range("variable " + mvsurf::to_string(v) + " not in universe");
        Exponents e(p.u_->size(), 0);
        e[static_cast<std::size_t>(it - p.u_->begin())] = 1;
        p.terms_.emplace(std::move(e), BigInt{1});
        return p;
    }

    [[nodiscard]] const Universe& universe() const noexcept { return *u_; }
    [[nodiscard]] const std::shared_ptr<const Universe>& universe_ptr() const noexcept { return u_; }
    [[nodiscard]] const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    IntMultiPoly& operator+=(const IntMultiPoly& o) {
        check_universe(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    IntMultiPoly& operator-=(const IntMultiPoly& o) {
        check_universe(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, -c);
        return *this;
    }
    friend IntMultiPoly operator+(IntMultiPoly a, const IntMultiPoly& b) { return a += b; }
    friend IntMultiPoly operator-(IntMultiPoly a, const IntMultiPoly& b) { return a -= b; }
    friend IntMultiPoly operator-(const IntMultiPoly& a) {
        IntMultiPoly r(a.u_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend IntMultiPoly operator*(const IntMultiPoly& a, const IntMultiPoly& b) {
        a.check_universe(b);
        IntMultiPoly r(a.u_);
        Exponents e(a.u_->size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.accumulate(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const IntMultiPoly& a, const IntMultiPoly& b) {
        return *a.u_ == *b.u_ && a.terms_ == b.terms_;
    }

    // Distinct values of sum_k w(var_k) * e_k over the terms. A single value
    // means the polynomial is homogeneous for that weight.
    [[nodiscard]] std::set<long> weighted_degrees(const std::function<long(const CoefficientIndex&)>& w) const {
        std::vector<long> wv(u_->size());
        for (std::size_t k = 0; k < wv.size(); ++k) wv[k] = w((*u_)[k]);
        std::set<long> out;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (std::size_t k = 0; k < e.size(); ++k) d += wv[k] * static_cast<long>(e[k]);
            out.insert(d);
        }
        return out;
    }

    [[nodiscard]] std::set<long> total_degrees() const {
        return weighted_degrees([](const CoefficientIndex&) { return 1L; });
    }

    // Reduce mod p after substituting value(var) for each variable.
    [[nodiscard]] u64 eval_mod(const PrimeField& F, const std::function<u64(const CoefficientIndex&)>& value) const {
        std::vector<u64> vals(u_->size());
        for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = value((*u_)[k]);
        const BigInt p = F.modulus();
        u64 acc = 0;
        for (const auto& [e, c] : terms_) {
            BigInt r = c % p;
            if (r < 0) r += p;
            u64 term = static_cast<u64>(r);
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k]) term = F.mul(term, F.pow(vals[k], e[k]));
            acc = F.add(acc, term);
        }
        return acc;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += mvsurf::to_string((*u_)[k]);
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (mono.empty()) s += mag.str();
            else if (mag == 1) s += mono;
            else s += mag.str() + "*" + mono;
        }
        return s;
    }

   private:
    void check_universe(const IntMultiPoly& o) const {
        if (u_ != o.u_ && *u_ != *o.u_) throw std::invalid_argument("IntMultiPoly: mismatched variable universes");
    }
    void accumulate(const Exponents& e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::shared_ptr<const Universe> u_;
    std::map<Exponents, BigInt> terms_;
};

// gcd of the integer coefficients; content(0) = 0.
inline BigInt content(const IntMultiPoly& P) {
    BigInt g = 0;
    for (const auto& [e, c] : P.terms()) {
        g = boost::multiprecision::gcd(g, c < 0 ? BigInt(-c) : c);
        if (g == 1) break;
    }
    return g;
}

struct IntPolyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<IntMultiPoly> entries;

    [[nodiscard]] const IntMultiPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    [[nodiscard]] IntMultiPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

inline constexpr std::size_t kSymbolicDetMaxSize = 8;

// Exact determinant by row-wise Laplace expansion, memoised over column
// subsets: minors[S] = det(rows 0..|S|-1, columns S). Division-free, so it
// stays in Z[c]. O(2^n n) polynomial products; guarded to n <= 8.
inline IntMultiPoly int_det_symbolic(const IntPolyMatrix& M) {
    if (M.rows != M.cols) {
        throw DimensionError("int_det_symbolic: matrix is " + std::to_string(M.rows) + "x" +
                             std::to_string(M.cols));
    }
    const std::size_t n = M.rows;
    if (n > kSymbolicDetMaxSize) {
        throw CapacityError("int_det_symbolic: size " + std::to_string(n) + " exceeds guard " +
                            std::to_string(kSymbolicDetMaxSize));
    }
    if (n == 0) throw DimensionError("int_det_symbolic: empty matrix has no variable universe");
    const auto& u = M.entries.front().universe_ptr();
    std::vector<std::optional<IntMultiPoly>> minors(std::size_t{1} << n);
    minors[0] = IntMultiPoly::constant(u, 1);
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
        if (!minors[mask] || minors[mask]->is_zero()) continue;
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (k == n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c)) continue;
            const IntMultiPoly& entry = M.at(k, c);
            if (entry.is_zero()) continue;
            // sign of expanding along the new last row: (-1)^{#cols in mask above c}
            const std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask >> (c + 1)));
            IntMultiPoly term = entry * *minors[mask];
            auto& slot = minors[mask | (std::size_t{1} << c)];
            if (!slot) slot = IntMultiPoly(u);
            if (above % 2) *slot -= term;
            else *slot += term;
        }
    }
    auto& full = minors.back();
    return full ? *full : IntMultiPoly(u);
}

}  // namespace mvsurf

#endif  // MVSURF_EXACTALG_INT_MULTI_POLY_HPP
