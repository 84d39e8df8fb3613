#include "oracles.hpp"

#include <etaq/eta.hpp>

#include <gtest/gtest.h>

namespace etaq {
namespace {

using testing::Rng;

EtaQuotient random_quotient(Rng& rng, int max_j, int max_e)
{
    std::vector<EtaFactor> f;
    for (int j = 1; j <= max_j; ++j)
        if (const auto e = rng.uniform(-max_e, max_e); e != 0 && rng.uniform(0, 1)) f.push_back({std::uint32_t(j), e});
    return EtaQuotient(std::move(f));
}

std::vector<BigInt> as_vec(const ExactSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

TEST(ParseEta, AcceptsTheGrammar)
{
    EXPECT_EQ(parse_eta("f1"), EtaQuotient::f(1));
    EXPECT_EQ(parse_eta("1/f1"), EtaQuotient::f(1, -1));
    EXPECT_EQ(parse_eta(" f1^2 * f4 / f2 "), EtaQuotient({{1, 2}, {2, -1}, {4, 1}}));
    EXPECT_EQ(parse_eta("f2^-3/f2^-3"), EtaQuotient());
    EXPECT_EQ(parse_eta("f1^5/f5").to_string(), "f1^5/f5");
    EXPECT_EQ(parse_eta("f4/f2^2*f1").to_string(), "f1*f4/f2^2");
    EXPECT_EQ(parse_eta("1").to_string(), "1");
}

TEST(ParseEta, RoundTripsItsCanonicalForm)
{
    Rng rng(31);
    for (int it = 0; it < 200; ++it) {
        const auto q = random_quotient(rng, 12, 9);
        EXPECT_EQ(parse_eta(q.to_string()), q) << q.to_string();
    }
}

TEST(ParseEta, ReportsTheColumn)
{
    auto column = [](std::string_view s) -> std::optional<std::size_t> {
        try {
            parse_eta(s);
        } catch (const ParseError& e) {
            return e.column();
        }
        return std::nullopt;
    };
    EXPECT_EQ(column(""), std::optional<std::size_t>(0));
    EXPECT_EQ(column("f1*"), std::optional<std::size_t>(3));
    EXPECT_EQ(column("f0"), std::optional<std::size_t>(1));
    EXPECT_EQ(column("f1+f2"), std::optional<std::size_t>(2));
    EXPECT_EQ(column("(f1)"), std::optional<std::size_t>(0));
    EXPECT_EQ(column("g1"), std::optional<std::size_t>(0));
    EXPECT_EQ(column("f1^"), std::optional<std::size_t>(3));
    EXPECT_THROW(parse_eta("f1^99999999999999999999"), std::overflow_error);
}

TEST(EtaQuotient, AlgebraOfExponents)
{
    const auto a = parse_eta("f1^3*f2/f5"), b = parse_eta("f2^-1*f5^2");
    EXPECT_EQ(a * b, parse_eta("f1^3*f5"));
    EXPECT_EQ(a / a, EtaQuotient());
    EXPECT_EQ(a.pow(-2), parse_eta("f5^2/f1^6/f2^2"));
    EXPECT_EQ(a.exponent_of(5), -1);
    EXPECT_EQ(a.exponent_of(7), 0);
    EXPECT_THROW(EtaQuotient({{0, 1}}), std::invalid_argument);
}

TEST(Pentagonal, EulerExpansionOfF1)
{
    const auto t = pentagonal_terms(100);
    std::vector<std::pair<std::size_t, int>> got;
    for (const auto& p : t) got.emplace_back(p.exponent, p.sign);
    const std::vector<std::pair<std::size_t, int>> want = {{0, 1},   {1, -1}, {2, -1}, {5, 1},  {7, 1},   {12, -1},
                                                           {15, -1}, {22, 1}, {26, 1}, {35, -1}, {40, -1}, {51, 1},
                                                           {57, 1},  {70, -1}, {77, -1}, {92, 1}};
    EXPECT_EQ(got, want);
}

TEST(EtaSeries, SparsePassesAgreeWithGenericAndDirectProducts)
{
    Rng rng(32);
    for (int it = 0; it < 40; ++it) {
        const auto q = random_quotient(rng, 8, 5);
        const std::size_t N = 1 + static_cast<std::size_t>(rng.uniform(0, 160));
        const auto sparse = eta_series(q, N, ExactInt{});
        EXPECT_EQ(sparse, eta_series_generic(q, N, ExactInt{})) << q.to_string();
        EXPECT_EQ(as_vec(sparse), testing::naive_eta(q, N)) << q.to_string();
        EXPECT_EQ(eta_series(q, N, ModInt(25)), reduce_mod(sparse, 25)) << q.to_string();
        EXPECT_EQ(eta_series(q, N, ModInt(2147483647)), eta_series_generic(q, N, ModInt(2147483647)));
    }
}

TEST(EtaSeries, ApplyEtaComposes)
{
    Rng rng(33);
    for (int it = 0; it < 20; ++it) {
        const auto a = random_quotient(rng, 6, 4), b = random_quotient(rng, 6, 4);
        auto s = eta_series(a, 120, ModInt(9));
        apply_eta(s, b);
        EXPECT_EQ(s, eta_series(a * b, 120, ModInt(9)));
        apply_eta(s, b.pow(-1));
        EXPECT_EQ(s, eta_series(a, 120, ModInt(9)));
    }
}

TEST(EtaSeries, KnownExpansions)
{
    const ExactInt Z;
    // phi(q) = f2^5 / (f1^2 f4^2) = 1 + 2q + 2q^4 + 2q^9 + ...
    const auto phi = eta_series(parse_eta("f2^5/f1^2/f4^2"), 30, Z);
    for (std::size_t n = 0; n < 30; ++n) {
        const bool square = n == 0 || n == 1 || n == 4 || n == 9 || n == 16 || n == 25;
        EXPECT_EQ(phi[n], n == 0 ? 1 : square ? 2 : 0) << n;
    }
    // Jacobi: f1^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}.
    const auto cube = eta_series(parse_eta("f1^3"), 60, Z);
    for (long k = 0; k * (k + 1) / 2 < 60; ++k) EXPECT_EQ(cube[k * (k + 1) / 2], (k % 2 ? -1 : 1) * (2 * k + 1));
}

}  // namespace
}  // namespace etaq
