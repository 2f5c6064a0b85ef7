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

#ifndef MVSURF_EXACTALG_PRIME_FIELD_HPP
#define MVSURF_EXACTALG_PRIME_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>

#include "../errors.hpp"

#if !defined(__SIZEOF_INT128__)
#error "mvsurf requires unsigned __int128 (GCC/Clang)."
#endif

namespace mvsurf {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest prime below 2^62. Products of two residues fit in 124 bits, so a
// handful of multiply-adds can be accumulated in a u128 before reducing.
inline constexpr u64 kDefaultPrime = (u64{1} << 62) - 57;

namespace detail {

constexpr u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

constexpr u64 powmod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; the first twelve prime bases are a proven
// witness set for all n < 3.3e24, which covers the whole 64-bit range.
constexpr bool is_prime(u64 n) {
    if (n < 2) return false;
    constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : bases) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

static_assert(is_prime(kDefaultPrime));
static_assert(!is_prime((u64{1} << 62) - 1));

// Arithmetic context for F_p. Elements are plain u64 residues in [0, p);
// every operation expects canonical inputs and returns canonical outputs.
class PrimeField {
   public:
    using value_type = u64;

    explicit PrimeField(u64 p = kDefaultPrime) : p_(p) {
        if (!is_prime(p)) throw ModulusError("modulus " + std::to_string(p) + " is not prime");
    }

    [[nodiscard]] u64 modulus() const noexcept { return p_; }

    [[nodiscard]] u64 zero() const noexcept { return 0; }
    [[nodiscard]] u64 one() const noexcept { return 1; }

    [[nodiscard]] u64 from_uint(u64 v) const noexcept { return v % p_; }
    [[nodiscard]] u64 from_int(std::int64_t v) const noexcept {
        if (v >= 0) return static_cast<u64>(v) % p_;
        const u64 r = static_cast<u64>(-(v + 1)) % p_;  // avoids INT64_MIN overflow
        return r == p_ - 1 ? 0 : p_ - 1 - r;
    }

    [[nodiscard]] u64 add(u64 a, u64 b) const noexcept {
        const u64 s = a + b;
        return (s < a || s >= p_) ? s - p_ : s;
    }
    [[nodiscard]] u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] u64 mul(u64 a, u64 b) const noexcept { return detail::mulmod(a, b, p_); }
    [[nodiscard]] u64 pow(u64 a, u64 e) const noexcept { return detail::powmod(a, e, p_); }

    [[nodiscard]] u64 inv(u64 a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    u64 p_;
};

}  // namespace mvsurf

#endif  // MVSURF_EXACTALG_PRIME_FIELD_HPP
