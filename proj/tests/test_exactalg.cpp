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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace mvsurf;

namespace {

FieldMatrix random_matrix(const PrimeField& F, std::size_t n, std::uint64_t seed) {
    TrialRng rng(seed, "exactalg-test", n);
    FieldMatrix M(n, n);
    for (auto& e : M.entries) e = rng.element(F);
    return M;
}

}  // namespace

TEST(PrimeField, DefaultIsLargestPrimeBelow2Pow62) {
    EXPECT_EQ(kDefaultPrime, 4611686018427387847ULL);
    EXPECT_TRUE(is_prime(kDefaultPrime));
    for (u64 q = kDefaultPrime + 2; q < (u64{1} << 62); q += 2) EXPECT_FALSE(is_prime(q)) << q;
    EXPECT_EQ(PrimeField().modulus(), kDefaultPrime);
}

TEST(PrimeField, PrimalityKnownValues) {
    for (u64 q : {2ULL, 3ULL, 101ULL, 2147483647ULL, 2305843009213693951ULL, 18446744073709551557ULL})
        EXPECT_TRUE(is_prime(q)) << q;
    for (u64 q : {0ULL, 1ULL, 4ULL, 561ULL, 3215031751ULL, 3825123056546413051ULL, 18446744073709551615ULL})
        EXPECT_FALSE(is_prime(q)) << q;
}

TEST(PrimeField, RejectsComposite) {
    EXPECT_THROW(PrimeField(100), ModulusError);
    EXPECT_THROW(PrimeField(1), ModulusError);
}

TEST(PrimeField, ArithmeticNear2Pow64) {
    const PrimeField F(18446744073709551557ULL);
    const u64 a = F.modulus() - 1, b = F.modulus() - 2;
    EXPECT_EQ(F.add(a, b), F.modulus() - 3);
    EXPECT_EQ(F.sub(b, a), F.modulus() - 1);
    EXPECT_EQ(F.mul(a, a), 1u);
    EXPECT_EQ(F.from_int(-1), F.modulus() - 1);
}

TEST(PrimeField, InverseProperty) {
    for (u64 p : std::vector<u64>{101, 2147483647, kDefaultPrime}) {
        const PrimeField F(p);
        TrialRng rng(1, "inv", p);
        for (int k = 0; k < 200; ++k) {
            const u64 a = rng.nonzero(F);
            EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
            EXPECT_EQ(F.add(a, F.neg(a)), 0u);
        }
        EXPECT_THROW((void)F.inv(0), std::domain_error);
    }
}

TEST(FfDet, EmptyMatrixIsOne) { EXPECT_EQ(ff_det(PrimeField(101), FieldMatrix(0, 0)), 1u); }

TEST(FfDet, IdentityIsOne) { EXPECT_EQ(ff_det(PrimeField(101), FieldMatrix::identity(7)), 1u); }

TEST(FfDet, NonSquareThrows) { EXPECT_THROW((void)ff_det(PrimeField(101), FieldMatrix(2, 3)), DimensionError); }

TEST(FfDet, MatchesCofactorOracle) {
    for (u64 p : std::vector<u64>{101, 2147483647, kDefaultPrime}) {
        const PrimeField F(p);
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const auto M = random_matrix(F, n, seed);
                EXPECT_EQ(ff_det(F, M), oracle::det_cofactor(F, M)) << "p=" << p << " n=" << n;
            }
    }
}

TEST(FfDet, SeededFiveByFiveOverSmallPrime) {
    const PrimeField F(101);
    const auto M = random_matrix(F, 5, 42);
    EXPECT_EQ(ff_det(F, M), oracle::det_cofactor(F, M));
}

TEST(FfDet, SparseAndSingular) {
    const PrimeField F(101);
    // leading zero column entry forces a row swap
    FieldMatrix M(3, 3);
    M.entries = {0, 2, 3, 4, 5, 6, 7, 8, 10};
    EXPECT_EQ(ff_det(F, M), oracle::det_cofactor(F, M));
    M.entries = {1, 2, 3, 2, 4, 6, 7, 8, 10};
    EXPECT_EQ(ff_det(F, M), 0u);
}

TEST(FfDet, BlockTriangularMultiplicative) {
    const PrimeField F(kDefaultPrime);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto A = random_matrix(F, 3, seed), C = random_matrix(F, 4, seed + 100), B = random_matrix(F, 7, seed);
        FieldMatrix M(7, 7);
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < 7; ++c) {
                if (r < 3 && c < 3) M.at(r, c) = A.at(r, c);
                else if (r >= 3 && c >= 3) M.at(r, c) = C.at(r - 3, c - 3);
                else if (r < 3) M.at(r, c) = B.at(r, c);
            }
        EXPECT_EQ(ff_det(F, M), F.mul(ff_det(F, A), ff_det(F, C)));
    }
}

TEST(FfDet, RowSwapNegates) {
    const PrimeField F(kDefaultPrime);
    auto M = random_matrix(F, 6, 9);
    const u64 d = ff_det(F, M);
    for (std::size_t c = 0; c < 6; ++c) std::swap(M.at(1, c), M.at(4, c));
    EXPECT_EQ(ff_det(F, M), F.neg(d));
}

TEST(UniPoly, NormalizationAndDegree) {
    EXPECT_EQ(UniPoly({1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(UniPoly({0, 0}).is_zero());
    EXPECT_EQ(UniPoly().degree(), -1);
    EXPECT_FALSE(UniPoly().valuation().has_value());
    EXPECT_EQ(*UniPoly({0, 0, 5}).valuation(), 2u);
    EXPECT_EQ(UniPoly::monomial(3, 4).coefficient(4), 3u);
}

TEST(UniPoly, ArithmeticAndEval) {
    const PrimeField F(101);
    const UniPoly a{1, 1}, b{100, 1};  // (1+t), (t-1)
    const auto prod = mul(F, a, b);
    EXPECT_EQ(prod, (UniPoly{100, 0, 1}));
    EXPECT_EQ(prod.eval(F, 10), 99u);
    EXPECT_TRUE(sub(F, a, a).is_zero());
}

TEST(UniPoly, InterpolationRoundTrip) {
    const PrimeField F(kDefaultPrime);
    TrialRng rng(3, "interp", 0);
    std::vector<u64> c(9);
    for (auto& v : c) v = rng.element(F);
    const UniPoly P(c);
    std::vector<u64> xs, ys;
    for (u64 x = 0; x < 9; ++x) {
        xs.push_back(x);
        ys.push_back(P.eval(F, x));
    }
    EXPECT_EQ(interpolate(F, xs, ys), P);
}

TEST(UpolyDet, SmallExamples) {
    const PrimeField F(101);
    UniPolyMatrix D(2, 2);
    D.at(0, 0) = UniPoly{0, 1};
    D.at(1, 1) = UniPoly{0, 1};
    EXPECT_EQ(upoly_det(F, D, 2), (UniPoly{0, 0, 1}));
    UniPolyMatrix M(2, 2);
    M.at(0, 0) = UniPoly{0, 1};
    M.at(0, 1) = UniPoly::constant(1);
    M.at(1, 0) = UniPoly::constant(1);
    M.at(1, 1) = UniPoly{0, 1};
    EXPECT_EQ(upoly_det(F, M, 2), (UniPoly{100, 0, 1}));
}

TEST(UpolyDet, Errors) {
    UniPolyMatrix M(2, 2);
    M.at(0, 0) = UniPoly{0, 1};
    M.at(1, 1) = UniPoly{0, 1};
    EXPECT_THROW((void)upoly_det(PrimeField(101), M, 1), ConstraintError);
    EXPECT_THROW((void)upoly_det(PrimeField(3), M, 4), ModulusError);
    EXPECT_THROW((void)upoly_det(PrimeField(101), UniPolyMatrix(2, 3), 4), DimensionError);
}

TEST(UpolyDet, MatchesCofactorOracleAndPointEvaluation) {
    const PrimeField F(2147483647);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        TrialRng rng(seed, "upoly", 0);
        const std::size_t n = 2 + seed % 4;
        UniPolyMatrix M(n, n);
        for (auto& e : M.entries) e = UniPoly{rng.element(F), rng.element(F), rng.uniform(2) ? rng.element(F) : 0};
        const auto P = upoly_det(F, M, 2 * n);
        EXPECT_EQ(P, oracle::det_cofactor(F, M));
        for (int k = 0; k < 10; ++k) {
            const u64 t0 = rng.element(F);
            EXPECT_EQ(P.eval(F, t0), ff_det(F, M.evaluate(F, t0)));
        }
    }
}

namespace {

IntPolyMatrix generic_matrix(std::size_t n) {
    std::vector<CoefficientIndex> vars;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            vars.push_back({static_cast<int>(r + 1), {static_cast<std::int64_t>(c), 0}});
    const auto u = IntMultiPoly::make_universe(vars);
    IntPolyMatrix M;
    M.rows = M.cols = n;
    for (const auto& v : vars) M.entries.push_back(IntMultiPoly::variable(u, v));
    return M;
}

}  // namespace

TEST(IntDetSymbolic, Generic2x2) {
    const auto P = int_det_symbolic(generic_matrix(2));
    EXPECT_EQ(P.term_count(), 2u);
    EXPECT_EQ(P.to_string().find("c[") != std::string::npos, true);
}

TEST(IntDetSymbolic, LeibnizTermCounts) {
    EXPECT_EQ(int_det_symbolic(generic_matrix(3)).term_count(), 6u);
    EXPECT_EQ(int_det_symbolic(generic_matrix(5)).term_count(), 120u);
}

TEST(IntDetSymbolic, ZeroRowGivesZero) {
    auto M = generic_matrix(3);
    for (std::size_t c = 0; c < 3; ++c) M.at(1, c) = IntMultiPoly(M.at(0, 0).universe_ptr());
    EXPECT_TRUE(int_det_symbolic(M).is_zero());
}

TEST(IntDetSymbolic, CapacityAndShape) {
    EXPECT_THROW((void)int_det_symbolic(generic_matrix(kSymbolicDetMaxSize + 1)), CapacityError);
    auto M = generic_matrix(2);
    M.cols = 1;
    M.entries.erase(M.entries.begin() + 2, M.entries.end());
    EXPECT_THROW((void)int_det_symbolic(M), DimensionError);
}

TEST(Content, Examples) {
    const auto u = IntMultiPoly::make_universe({{1, {0, 0}}, {2, {0, 0}}});
    const auto x = IntMultiPoly::variable(u, {1, {0, 0}}), y = IntMultiPoly::variable(u, {2, {0, 0}});
    const auto p = IntMultiPoly::constant(u, 6) * x + IntMultiPoly::constant(u, 9) * y;
    EXPECT_EQ(content(p), 3);
    EXPECT_EQ(content(IntMultiPoly(u)), 0);
    EXPECT_EQ(content(-p), 3);
}

TEST(IntDetSymbolic, AgreesWithFieldDeterminantOfF11) {
    const PrimeField F(kDefaultPrime);
    const auto t = build_F_tensor(1, 1);
    const auto P = int_det_symbolic(to_symbolic(t));
    EXPECT_EQ(P.term_count(), 24u);
    EXPECT_EQ(content(P), 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TrialRng rng(seed, "symbolic-eval", 0);
        CoefficientAssignment<u64> a(t.support);
        for (const auto& c : a.indices()) a.set(c, F.from_int(static_cast<std::int64_t>(rng.uniform(2001)) - 1000));
        EXPECT_EQ(P.eval_mod(F, [&](const CoefficientIndex& c) { return a.get(c); }), ff_det(F, specialize(t, a, F)));
    }
}
