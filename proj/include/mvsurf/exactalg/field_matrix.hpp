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

#ifndef MVSURF_EXACTALG_FIELD_MATRIX_HPP
#define MVSURF_EXACTALG_FIELD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prime_field.hpp"

namespace mvsurf {

// Dense row-major matrix over F_p with opaque row/column labels.
struct FieldMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<u64> entries;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c, 0), row_labels(r), col_labels(c) {}

    [[nodiscard]] u64& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    [[nodiscard]] u64 at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    [[nodiscard]] bool square() const noexcept { return rows == cols; }

    static FieldMatrix identity(std::size_t n) {
        FieldMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

// Determinant by Gaussian elimination, pivoting on the first nonzero entry of
// each column. O(n^3) field operations; the input is taken by value.
inline u64 ff_det(const PrimeField& F, FieldMatrix M) {
    if (!M.square()) {
        throw DimensionError("ff_det: matrix is " + std::to_string(M.rows) + "x" +
                             std::to_string(M.cols));
    }
    const std::size_t n = M.rows;
    u64 det = 1;
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(M.at(piv, k), M.at(c, k));
            negate = !negate;
        }
        const u64 pivot = M.at(c, c);
        det = F.mul(det, pivot);
        const u64 pinv = F.inv(pivot);
        for (std::size_t r = c + 1; r < n; ++r) {
            const u64 lead = M.at(r, c);
            if (lead == 0) continue;
            const u64 factor = F.mul(lead, pinv);
            u64* dst = &M.entries[r * n];
            const u64* src = &M.entries[c * n];
            for (std::size_t k = c; k < n; ++k) {
                if (src[k] != 0) dst[k] = F.sub(dst[k], F.mul(factor, src[k]));
            }
        }
    }
    return negate ? F.neg(det) : det;
}

}  // namespace mvsurf

#endif  // MVSURF_EXACTALG_FIELD_MATRIX_HPP
