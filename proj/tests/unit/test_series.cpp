#include "oracles.hpp"

#include <etaq/series.hpp>

#include <gtest/gtest.h>

namespace etaq {
namespace {

using testing::Rng;

ExactSeries random_exact(Rng& rng, std::size_t N, int density_percent = 60, long span = 50)
{
    ExactSeries s(ExactInt{}, N);
    for (std::size_t n = 0; n < N; ++n)
        if (rng.uniform(0, 99) < density_percent) s.set(n, BigInt(rng.uniform(-span, span)));
    return s;
}

std::vector<BigInt> as_vec(const ExactSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

TEST(MakeSeries, BuildsAndNormalizes)
{
    const ModInt R(7);
    const auto s = make_series(R, 5, {{0, 8u}, {3, 13u}});
    EXPECT_EQ(s.trunc(), 5u);
    EXPECT_EQ(s[0], 1u);
    EXPECT_EQ(s[3], 6u);
    EXPECT_EQ(s[4], 0u);
}

TEST(MakeSeries, Errors)
{
    const ExactInt Z;
    EXPECT_THROW(make_series(Z, 0, {}), std::invalid_argument);
    EXPECT_THROW(make_series(Z, 4, {{4, BigInt(1)}}), std::invalid_argument);
    EXPECT_THROW(make_series(Z, 4, {{1, BigInt(1)}, {1, BigInt(2)}}), std::invalid_argument);
}

TEST(SeriesOps, MismatchedOperandsThrow)
{
    const auto a = one_series(ModInt(5), 4);
    const auto b = one_series(ModInt(5), 5);
    const auto c = one_series(ModInt(7), 4);
    EXPECT_THROW(a + b, TruncationMismatch);
    EXPECT_THROW(mul(a, c), RingMismatch);
    EXPECT_THROW(truncate(a, 6), TruncationMismatch);
}

TEST(SeriesOps, MulMatchesSchoolbook)
{
    Rng rng(21);
    for (int it = 0; it < 30; ++it) {
        const std::size_t N = 1 + static_cast<std::size_t>(rng.uniform(0, 120));
        const auto a = random_exact(rng, N, static_cast<int>(rng.uniform(5, 100)));
        const auto b = random_exact(rng, N, static_cast<int>(rng.uniform(5, 100)));
        EXPECT_EQ(as_vec(mul(a, b)), testing::naive_mul(as_vec(a), as_vec(b))) << "N=" << N;
    }
}

TEST(SeriesOps, ReduceModIsAHomomorphism)
{
    Rng rng(22);
    for (std::uint64_t m : {4ull, 25ull, 65536ull, 65537ull, 2147483647ull}) {
        for (int it = 0; it < 10; ++it) {
            const std::size_t N = 1 + static_cast<std::size_t>(rng.uniform(0, 150));
            const auto a = random_exact(rng, N, 70, 1000000), b = random_exact(rng, N, 70, 1000000);
            EXPECT_EQ(reduce_mod(mul(a, b), m), mul(reduce_mod(a, m), reduce_mod(b, m))) << "m=" << m;
            EXPECT_EQ(reduce_mod(a + b, m), reduce_mod(a, m) + reduce_mod(b, m));
            EXPECT_EQ(reduce_mod(a - b, m), reduce_mod(a, m) - reduce_mod(b, m));
            EXPECT_EQ(reduce_mod(dilate(a, 3), m), dilate(reduce_mod(a, m), 3));
        }
    }
}

TEST(SeriesOps, GaussianReductionCommutesWithProducts)
{
    Rng rng(23);
    for (int it = 0; it < 10; ++it) {
        const std::size_t N = 1 + static_cast<std::size_t>(rng.uniform(0, 80));
        GaussSeries a(GaussianInt{}, N), b(GaussianInt{}, N);
        for (std::size_t n = 0; n < N; ++n) {
            a.set(n, {rng.uniform(-30, 30), rng.uniform(-30, 30)});
            b.set(n, {rng.uniform(-30, 30), rng.uniform(-30, 30)});
        }
        EXPECT_EQ(reduce_mod(mul(a, b), 25), mul(reduce_mod(a, 25), reduce_mod(b, 25)));
        EXPECT_EQ(conjugate(mul(a, b)), mul(conjugate(a), conjugate(b)));
        const auto re = real_part(a), im = imag_part(a);
        for (std::size_t n = 0; n < N; ++n) EXPECT_EQ(Gaussian(re[n], im[n]), a[n]);
        EXPECT_EQ(real_part(to_gaussian(re)), re);
    }
}

template <class R>
void invert_round_trip(const R& ring, std::uint32_t seed)
{
    Rng rng(seed);
    for (int it = 0; it < 15; ++it) {
        const std::size_t N = 1 + static_cast<std::size_t>(rng.uniform(0, 100));
        TruncatedSeries<R> a(ring, N);
        for (std::size_t n = 1; n < N; ++n)
            if (rng.uniform(0, 2) == 0) a.set(n, ring.from_integer(rng.uniform(-9, 9)));
        a.set(0, rng.uniform(0, 1) ? ring.one() : ring.neg(ring.one()));
        const auto inv = invert(a);
        EXPECT_EQ(mul(a, inv), one_series(ring, N)) << ring.describe() << " N=" << N;
        EXPECT_EQ(invert(inv), a);
        EXPECT_EQ(pow(a, -3), pow(inv, 3));
    }
}

TEST(SeriesOps, InvertIsATwoSidedInverse)
{
    invert_round_trip(ExactInt{}, 24);
    invert_round_trip(ModInt(25), 25);
    invert_round_trip(ModInt(1000003), 26);
    invert_round_trip(GaussianInt{}, 27);
    invert_round_trip(GaussianModInt(9), 28);
}

TEST(SeriesOps, InvertRejectsNonUnitConstantTerm)
{
    EXPECT_THROW(invert(make_series(ExactInt{}, 3, {{0, BigInt(2)}})), NonUnitConstantTerm);
    EXPECT_THROW(invert(make_series(ModInt(25), 3, {{0, 10u}})), NonUnitConstantTerm);
    EXPECT_NO_THROW(invert(make_series(ModInt(25), 3, {{0, 7u}})));
}

TEST(SeriesOps, PowAgreesWithRepeatedProduct)
{
    Rng rng(29);
    const auto a = random_exact(rng, 40);
    ExactSeries acc = one_series(ExactInt{}, 40);
    for (int e = 0; e <= 6; ++e) {
        EXPECT_EQ(pow(a, e), acc);
        acc = mul(acc, a);
    }
}

TEST(Dissection, ReassemblyRestoresTheSeries)
{
    Rng rng(30);
    for (int it = 0; it < 40; ++it) {
        const std::size_t N = 1 + static_cast<std::size_t>(rng.uniform(0, 200));
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 12));
        const auto a = random_exact(rng, N);
        const auto d = dissect(a, m);
        ASSERT_EQ(d.components.size(), m);
        EXPECT_EQ(reassemble(d, N), a) << "N=" << N << " m=" << m;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t n = 0; n < d.components[r].trunc(); ++n) EXPECT_EQ(d.components[r][n], a[m * n + r]);
        ExactSeries sum(ExactInt{}, N);
        for (std::size_t r = 0; r < m; ++r) sum = sum + residue_part(a, m, r);
        EXPECT_EQ(sum, a);
    }
}

TEST(Dissection, ShortComponentsAndErrors)
{
    const auto a = one_series(ExactInt{}, 3);
    const auto d = dissect(a, 5);
    EXPECT_EQ(d.components[4].trunc(), 0u);
    EXPECT_THROW(dissect(a, 0), std::invalid_argument);
    EXPECT_THROW(reassemble(d, 4), TruncationMismatch);
}

TEST(SeriesOps, ShiftDilateAndLinearCombination)
{
    const ExactInt Z;
    const auto a = make_series(Z, 6, {{0, BigInt(1)}, {1, BigInt(2)}, {2, BigInt(3)}});
    EXPECT_EQ(shift(a, 2), make_series(Z, 6, {{2, BigInt(1)}, {3, BigInt(2)}, {4, BigInt(3)}}));
    EXPECT_EQ(dilate(a, 2), make_series(Z, 6, {{0, BigInt(1)}, {2, BigInt(2)}, {4, BigInt(3)}}));
    EXPECT_EQ(linear_combine<ExactInt>({{BigInt(2), a}, {BigInt(-1), shift(a, 1)}}),
              make_series(Z, 6, {{0, BigInt(2)}, {1, BigInt(3)}, {2, BigInt(4)}, {3, BigInt(-3)}}));
    EXPECT_EQ(first_mismatch(a, shift(a, 1)), std::optional<std::size_t>(0));
    EXPECT_EQ(first_nonzero(shift(a, 4)), std::optional<std::size_t>(4));
    EXPECT_THROW(dilate(a, 0), std::invalid_argument);
}

}  // namespace
}  // namespace etaq
