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

#ifndef MVSURF_RNG_HPP
#define MVSURF_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

#include "exactalg/prime_field.hpp"

namespace mvsurf {

// 64-bit FNV-1a; used only to turn stream names into seed words.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Independent stream keyed by (seed, stream name, trial, attempt). Two streams
// with different keys never share state, so trials can be evaluated in any
// order and still reproduce. All reductions to a range are done here rather
// than by <random> distributions, whose output is implementation-defined.
class TrialRng {
   public:
    TrialRng(std::uint64_t seed, std::string_view stream, std::uint64_t trial, std::uint64_t attempt = 0) {
        const std::uint64_t tag = fnv1a(stream);
        std::seed_seq seq{lo(seed), hi(seed), lo(tag), hi(tag), lo(trial), hi(trial), lo(attempt), hi(attempt)};
        eng_.seed(seq);
    }

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return eng_(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % bound;
    }

    u64 element(const PrimeField& F) { return uniform(F.modulus()); }
    u64 nonzero(const PrimeField& F) { return 1 + uniform(F.modulus() - 1); }

   private:
    static std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
    static std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }
    std::mt19937_64 eng_;
};

}  // namespace mvsurf

#endif  // MVSURF_RNG_HPP
