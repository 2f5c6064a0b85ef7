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

// Res_{m,n}(f1, f2, f3) for three bidegree-(m,n) polynomials over F_p, via the
// Dixon construction. For this support the Dixon matrix is square of size 2mn
// and its determinant is the resultant up to sign, with no extraneous factor.

#ifndef MVSURF_RESULTANT_HPP
#define MVSURF_RESULTANT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "errors.hpp"
#include "exactalg.hpp"

namespace mvsurf {

// Dense coefficients of sum c[a1][a2] x1^a1 x2^a2, 0 <= a1 <= m, 0 <= a2 <= n.
struct BidegreeGrid {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::vector<u64> c;

    BidegreeGrid() = default;
    BidegreeGrid(std::int64_t m_, std::int64_t n_)
        : m(m_), n(n_), c(static_cast<std::size_t>((m_ + 1) * (n_ + 1)), 0) {}

    [[nodiscard]] u64& at(std::int64_t a1, std::int64_t a2) { return c[static_cast<std::size_t>(a1 * (n + 1) + a2)]; }
    [[nodiscard]] u64 at(std::int64_t a1, std::int64_t a2) const {
        return c[static_cast<std::size_t>(a1 * (n + 1) + a2)];
    }
};

// Coefficients of F_i from an assignment; points of [0,m]x[0,n] outside the
// assignment's support contribute zero.
inline BidegreeGrid grid_of(const CoefficientAssignment<u64>& a, int i, std::int64_t m, std::int64_t n) {
    BidegreeGrid g(m, n);
    const auto& sup = a.support();
    for (std::int64_t a1 = 0; a1 <= m; ++a1)
        for (std::int64_t a2 = 0; a2 <= n; ++a2)
            if (std::binary_search(sup.begin(), sup.end(), LatticePoint{a1, a2}))
                g.at(a1, a2) = a.get({i, {a1, a2}});
    return g;
}

// Dense polynomial in (x1, x2, y1, y2); dims[k] = degree bound in variable k plus one.
class QuadPoly {
   public:
    enum Var : std::size_t { X1 = 0, X2 = 1, Y1 = 2, Y2 = 3 };
    using Exps = std::array<std::size_t, 4>;

    QuadPoly() = default;
    explicit QuadPoly(Exps dims) : dims_(dims), c_(dims[0] * dims[1] * dims[2] * dims[3], 0) {}

    [[nodiscard]] const Exps& dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t bound(Var v) const noexcept { return dims_[v] - 1; }

    [[nodiscard]] u64& at(const Exps& e) { return c_[offset(e)]; }
    [[nodiscard]] u64 at(const Exps& e) const { return c_[offset(e)]; }
    [[nodiscard]] u64 at(std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2) const {
        return at(Exps{x1, x2, y1, y2});
    }

    [[nodiscard]] bool is_zero() const noexcept {
        for (auto v : c_)
            if (v) return false;
        return true;
    }

    // Largest exponent of v carrying a nonzero coefficient; -1 for zero.
    [[nodiscard]] long degree(Var v) const {
        long d = -1;
        for_each([&](const Exps& e, u64 val) {
            if (val && static_cast<long>(e[v]) > d) d = static_cast<long>(e[v]);
        });
        return d;
    }

    [[nodiscard]] u64 eval(const PrimeField& F, u64 x1, u64 x2, u64 y1, u64 y2) const {
        const std::array<u64, 4> pt{x1, x2, y1, y2};
        u64 acc = 0;
        for_each([&](const Exps& e, u64 val) {
            if (!val) return;
            u64 t = val;
            for (std::size_t k = 0; k < 4; ++k) t = F.mul(t, F.pow(pt[k], e[k]));
            acc = F.add(acc, t);
        });
        return acc;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        Exps e{};
        for (e[0] = 0; e[0] < dims_[0]; ++e[0])
            for (e[1] = 0; e[1] < dims_[1]; ++e[1])
                for (e[2] = 0; e[2] < dims_[2]; ++e[2])
                    for (e[3] = 0; e[3] < dims_[3]; ++e[3]) fn(e, c_[offset(e)]);
    }

    // Exact quotient by (x - y) for variables x, y; throws InternalError when the
    // division leaves a remainder. Both degree bounds drop by one.
    [[nodiscard]] QuadPoly divide_by_difference(const PrimeField& F, Var x, Var y) const {
        if (dims_[x] < 2 || dims_[y] < 2) throw InternalError("divide_by_difference: degree too small");
        Exps qd = dims_;
        qd[x] -= 1;
        QuadPoly q(qd);  // y bound kept for now; trimmed after the exactness check
        // q_{d-1} = a_d ; q_{k-1} = a_k + y * q_k ; remainder a_0 + y * q_0 == 0
        const std::size_t d = dims_[x] - 1;
        bool exact = true;
        // all exponent tuples with e[x] == 0
        auto for_slice = [&](auto&& fn) {
            Exps e{};
            Exps lim = dims_;
            lim[x] = 1;
            for (e[0] = 0; e[0] < lim[0]; ++e[0])
                for (e[1] = 0; e[1] < lim[1]; ++e[1])
                    for (e[2] = 0; e[2] < lim[2]; ++e[2])
                        for (e[3] = 0; e[3] < lim[3]; ++e[3]) fn(e);
        };
        for (std::size_t k = d; k-- > 0;) {
            // q_k = a_{k+1} + y * q_{k+1}
            for_slice([&](Exps e) {
                Exps src = e;
                src[x] = k + 1;
                u64 v = at(src);
                if (k + 1 <= d - 1 && e[y] > 0) {
                    Exps prev = e;
                    prev[x] = k + 1;
                    prev[y] -= 1;
                    v = F.add(v, q.at(prev));
                }
                Exps dst = e;
                dst[x] = k;
                q.at(dst) = v;
            });
            // shifting q_k by y must stay within bounds for the next step
            for_slice([&](Exps e) {
                e[x] = k;
                e[y] = dims_[y] - 1;
                if (q.at(e) != 0) exact = false;
            });
        }
        for_slice([&](Exps e) {
            u64 v = at(e);  // a_0 at this (other) exponent
            if (e[y] > 0) {
                Exps prev = e;
                prev[y] -= 1;
                v = F.add(v, q.at(prev));  // q_0, since e[x] == 0
            }
            if (v != 0) exact = false;
        });
        if (!exact) throw InternalError("Dixon: division by (x - y) is not exact");
        Exps td = qd;
        td[y] -= 1;
        QuadPoly out(td);
        out.for_each_mut([&](const Exps& e, u64& v) { v = q.at(e); });
        return out;
    }

    template <class Fn>
    void for_each_mut(Fn&& fn) {
        Exps e{};
        for (e[0] = 0; e[0] < dims_[0]; ++e[0])
            for (e[1] = 0; e[1] < dims_[1]; ++e[1])
                for (e[2] = 0; e[2] < dims_[2]; ++e[2])
                    for (e[3] = 0; e[3] < dims_[3]; ++e[3]) fn(e, c_[offset(e)]);
    }

   private:
    [[nodiscard]] std::size_t offset(const Exps& e) const noexcept {
        return ((e[0] * dims_[1] + e[1]) * dims_[2] + e[2]) * dims_[3] + e[3];
    }

    Exps dims_{1, 1, 1, 1};
    std::vector<u64> c_{0};
};

// delta = det [ f_k(x1,x2) ; f_k(x1,y2) ; f_k(y1,y2) ]_{k=1..3} / ((x1-y1)(x2-y2)).
// Degree bounds: x1 <= 2m-1, x2 <= n-1, y1 <= m-1, y2 <= 2n-1.
inline QuadPoly dixon_polynomial(const PrimeField& F, const BidegreeGrid& f1, const BidegreeGrid& f2,
                                 const BidegreeGrid& f3) {
    const std::int64_t m = f1.m, n = f1.n;
    if (m < 1 || n < 1 || f2.m != m || f2.n != n || f3.m != m || f3.n != n)
        throw DimensionError("dixon_polynomial: grids must share one positive bidegree");
    for (const auto* g : {&f1, &f2, &f3})
        if (g->c.size() != static_cast<std::size_t>((m + 1) * (n + 1)))
            throw DimensionError("dixon_polynomial: grid storage does not match its bidegree");
    const std::array<const BidegreeGrid*, 3> f{&f1, &f2, &f3};
    const auto M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n);
    QuadPoly D({2 * M + 1, N + 1, M + 1, 2 * N + 1});
    constexpr std::array<std::array<int, 4>, 6> perms{
        {{0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}}};
    for (const auto& [r0, r1, r2, sign] : perms) {
        const auto& A = *f[static_cast<std::size_t>(r0)];  // f(x1, x2)
        const auto& B = *f[static_cast<std::size_t>(r1)];  // f(x1, y2)
        const auto& C = *f[static_cast<std::size_t>(r2)];  // f(y1, y2)
        for (std::size_t a1 = 0; a1 <= M; ++a1)
            for (std::size_t a2 = 0; a2 <= N; ++a2) {
                const u64 va = A.at(a1, a2);
                if (!va) continue;
                for (std::size_t b1 = 0; b1 <= M; ++b1)
                    for (std::size_t b2 = 0; b2 <= N; ++b2) {
                        const u64 vab = F.mul(va, B.at(b1, b2));
                        if (!vab) continue;
                        for (std::size_t c1 = 0; c1 <= M; ++c1)
                            for (std::size_t c2 = 0; c2 <= N; ++c2) {
                                const u64 v = F.mul(vab, C.at(c1, c2));
                                if (!v) continue;
                                u64& slot = D.at({a1 + b1, a2, c1, b2 + c2});
                                slot = sign > 0 ? F.add(slot, v) : F.sub(slot, v);
                            }
                    }
            }
    }
    return D.divide_by_difference(F, QuadPoly::X2, QuadPoly::Y2).divide_by_difference(F, QuadPoly::X1, QuadPoly::Y1);
}

// Rows x1^a1 x2^a2 (a1 < 2m, a2 < n), columns y1^b1 y2^b2 (b1 < m, b2 < 2n),
// both ascending lex; entry = coefficient of the product monomial in delta.
inline FieldMatrix dixon_matrix(const QuadPoly& delta, std::int64_t m, std::int64_t n) {
    const auto M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n);
    if (delta.dims() != QuadPoly::Exps{2 * M, N, M, 2 * N})
        throw DimensionError("dixon_matrix: delta does not have the bidegree-(m,n) bounds");
    FieldMatrix out(2 * M * N, 2 * M * N);
    std::size_t r = 0;
    for (std::size_t a1 = 0; a1 < 2 * M; ++a1)
        for (std::size_t a2 = 0; a2 < N; ++a2, ++r) {
            out.row_labels[r] = "x1^" + std::to_string(a1) + "*x2^" + std::to_string(a2);
            std::size_t c = 0;
            for (std::size_t b1 = 0; b1 < M; ++b1)
                for (std::size_t b2 = 0; b2 < 2 * N; ++b2, ++c) out.at(r, c) = delta.at(a1, a2, b1, b2);
        }
    std::size_t c = 0;
    for (std::size_t b1 = 0; b1 < M; ++b1)
        for (std::size_t b2 = 0; b2 < 2 * N; ++b2, ++c)
            out.col_labels[c] = "y1^" + std::to_string(b1) + "*y2^" + std::to_string(b2);
    return out;
}

inline u64 resultant_tensor(const PrimeField& F, const BidegreeGrid& f1, const BidegreeGrid& f2,
                            const BidegreeGrid& f3) {
    return ff_det(F, dixon_matrix(dixon_polynomial(F, f1, f2, f3), f1.m, f1.n));
}

}  // namespace mvsurf

#endif  // MVSURF_RESULTANT_HPP
