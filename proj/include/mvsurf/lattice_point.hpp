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

#ifndef MVSURF_LATTICE_POINT_HPP
#define MVSURF_LATTICE_POINT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace mvsurf {

// Exponent (a1, a2) of the monomial x1^a1 x2^a2. Ordered lexicographically by
// (a1, a2), which is the monomial order used for every basis in the library.
struct LatticePoint {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    friend constexpr LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.a1 + q.a1, p.a2 + q.a2}; }
    friend constexpr LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.a1 - q.a1, p.a2 - q.a2}; }
    friend constexpr LatticePoint operator*(std::int64_t k, LatticePoint p) { return {k * p.a1, k * p.a2}; }
};

inline std::string to_string(const LatticePoint& p) {
    return "(" + std::to_string(p.a1) + "," + std::to_string(p.a2) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << to_string(p); }

// The indeterminate c_{i,a}: coefficient of x^a in F_i, i in 1..4.
// Ordered lexicographically by (i, a1, a2).
struct CoefficientIndex {
    int i = 1;
    LatticePoint a;

    friend constexpr auto operator<=>(const CoefficientIndex&, const CoefficientIndex&) = default;
};

// "c[i][a1,a2]"
inline std::string to_string(const CoefficientIndex& c) {
    return "c[" + std::to_string(c.i) + "][" + std::to_string(c.a.a1) + "," + std::to_string(c.a.a2) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const CoefficientIndex& c) { return os << to_string(c); }

}  // namespace mvsurf

#endif  // MVSURF_LATTICE_POINT_HPP
