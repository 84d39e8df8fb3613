#include "etaq/combinatorics.hpp"

#include "etaq/eta.hpp"

#include <sstream>
#include <stdexcept>

namespace etaq {

namespace {

std::uint64_t isqrt(std::uint64_t n)
{
    std::uint64_t r = 0;
    for (std::uint64_t bit = 1ull << 31; bit > 0; bit >>= 1)
        if ((r + bit) * (r + bit) <= n) r += bit;
    return r;
}

bool is_square_positive(std::uint64_t n)
{
    if (n == 0) return false;
    const auto r = isqrt(n);
    return r * r == n;
}

std::vector<BigInt> coefficients(const ExactSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

VerifyReport passing(std::string id, std::size_t bound, std::optional<std::uint32_t> m, std::string detail)
{
    VerifyReport r;
    r.id = std::move(id);
    r.bound = bound;
    r.modulus = m;
    r.detail = std::move(detail);
    return r;
}

template <class A, class B>
bool failed(VerifyReport& r, std::size_t n, const A& lhs, const B& rhs, std::string condition)
{
    r.status = VerifyStatus::Fail;
    std::ostringstream a, b;
    a << lhs;
    b << rhs;
    r.mismatch = Mismatch{n, a.str(), b.str(), std::move(condition)};
    return true;
}

// Pair counts #{(m, k) : in_a(m), in_b(k), m + k = n} for all n < N.
template <class FA, class FB>
std::vector<std::uint64_t> pair_counts(std::size_t N, FA in_a, FB in_b)
{
    std::vector<std::uint64_t> bs;
    for (std::size_t k = 1; k < N; ++k)
        if (in_b(k)) bs.push_back(k);
    std::vector<std::uint64_t> out(N, 0);
    for (std::size_t m = 0; m < N; ++m) {
        if (!in_a(m)) continue;
        for (auto k : bs) {
            if (m + k >= N) break;
            ++out[m + k];
        }
    }
    return out;
}

}  // namespace

std::optional<std::int64_t> gen_pentagonal_index(std::uint64_t n)
{
    const std::uint64_t d = 24 * n + 1;
    const std::uint64_t s = isqrt(d);
    if (s * s != d) return std::nullopt;
    const auto si = static_cast<std::int64_t>(s);
    if ((1 + si) % 6 == 0) return (1 + si) / 6;
    if ((1 - si) % 6 == 0) return (1 - si) / 6;
    return std::nullopt;
}

bool is_gen_pentagonal(std::uint64_t n) { return gen_pentagonal_index(n).has_value(); }

bool is_S_square(std::uint64_t n) { return is_square_positive(n) || (n % 2 == 0 && is_square_positive(n / 2)); }

bool is_three_times_square(std::uint64_t n) { return n % 3 == 0 && is_square_positive(n / 3); }

std::vector<BigInt> partition_counts(std::size_t N) { return coefficients(eta_series(parse_eta("1/f1"), N, ExactInt{})); }

BigInt partition_count(std::uint64_t n) { return partition_counts(n + 1).back(); }

std::vector<BigInt> distinct_counts(std::size_t N) { return coefficients(eta_series(parse_eta("f2/f1"), N, ExactInt{})); }

BigInt distinct_count(std::uint64_t n) { return distinct_counts(n + 1).back(); }

std::vector<std::pair<std::uint64_t, std::uint64_t>> rep_pairs(const RepCountQuery& q)
{
    if (q.target < 1) throw std::invalid_argument("rep_count target must be at least 1");
    std::vector<bool> in_a(q.target + 1, false);
    if (q.a == PartA::GenPentagonal) {
        for (std::uint64_t m = 0; m <= q.target; ++m) in_a[m] = is_gen_pentagonal(m);
    } else {
        const auto p = eta_series(parse_eta("1/f1"), q.target + 1, ModInt(2));
        for (std::uint64_t m = 0; m <= q.target; ++m) in_a[m] = p[m] == 1;
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t m = q.target; m-- > 0;) {
        const std::uint64_t k = q.target - m;
        const bool in_b = q.b == PartB::SSquare ? is_S_square(k) : is_three_times_square(k);
        if (in_a[m] && in_b) out.emplace_back(m, k);
    }
    return out;
}

std::uint64_t rep_count(const RepCountQuery& q) { return rep_pairs(q).size(); }

std::vector<BigInt> D_S_series(std::size_t N) { return coefficients(eta_series(parse_eta("f1/f3"), N, ExactInt{})); }

std::vector<BigInt> p_a9_series(int a, std::size_t N)
{
    if (a < 1 || a > 4) throw std::invalid_argument("p_{a,9} needs 1 <= a <= 4");
    std::vector<BigInt> c(N, 0);
    if (N > 0) c[0] = 1;
    for (std::size_t k = 1; k < N; ++k) {
        const auto r = static_cast<int>(k % 9);
        if (r == 0 || r == a || r == 9 - a) continue;
        for (std::size_t n = k; n < N; ++n) c[n] += c[n - k];
    }
    return c;
}

VerifyReport verify_merca(std::uint64_t nmax)
{
    const std::size_t N = nmax + 1;
    VerifyReport r = passing("merca-pentagonal-plus-square", N, 2,
                             "count of pentagonal + (square or twice square) is odd iff n is an odd pentagonal number; "
                             "same parity rule with p(m) odd");
    const auto pent = pair_counts(N, is_gen_pentagonal, is_S_square);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const bool expect = n % 2 == 1 && is_gen_pentagonal(n);
        if ((pent[n] % 2 == 1) != expect && failed(r, n, pent[n], expect ? "odd" : "even", "pentagonal + S_square parity"))
            return r;
    }
    const auto podd = eta_series(parse_eta("1/f1"), N, ModInt(2));
    const auto part = pair_counts(N, [&](std::size_t m) { return podd[m] == 1; }, is_S_square);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const bool expect = n % 2 == 1 && podd[n] == 1;
        if ((part[n] % 2 == 1) != expect && failed(r, n, part[n], expect ? "odd" : "even", "p(m) odd + S_square parity"))
            return r;
    }
    return r;
}

VerifyReport verify_pent_plus_3square(std::uint64_t nmax)
{
    const std::size_t N = nmax + 1;
    VerifyReport r = passing("pentagonal-plus-three-square", N, 4,
                             "square or three-square representation parity, and Q_N = v_N + 2 w_N (mod 4)");
    const auto sq = pair_counts(N, is_gen_pentagonal, is_square_positive);
    const auto w = pair_counts(N, is_gen_pentagonal, is_three_times_square);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const auto t = gen_pentagonal_index(n);
        const bool expect = t && (*t % 2 != 0);
        const auto total = sq[n] + w[n];
        if ((total % 2 == 1) != expect && failed(r, n, total, expect ? "odd" : "even", "pentagonal + square or 3 square parity"))
            return r;
    }
    const auto Q = eta_series(parse_eta("f2/f1"), N, ModInt(4));
    for (std::uint64_t n = 0; n <= nmax; ++n) {
        const std::uint64_t v = is_gen_pentagonal(n) ? 1 : 0;
        const auto rhs = (v + 2 * w[n]) % 4;
        if (Q[n] != rhs && failed(r, n, Q[n], rhs, "Q_N = v_N + 2 w_N (mod 4)")) return r;
    }
    return r;
}

VerifyReport bipartition_checks(std::uint64_t nmax)
{
    const std::size_t N = nmax + 1;
    VerifyReport r = passing("bipartition-mod9", N, 9,
                             "D_S(n) = 0 iff p_2(n) = 0 (mod 9); 3-regular bipartitions vanish mod 9 iff n is not pentagonal");
    const ModInt R(9);
    const auto ds = eta_series(parse_eta("f1/f3"), N, R);
    const auto p2 = eta_series(parse_eta("1/f1^2"), N, R);
    const auto p23 = eta_series(parse_eta("f3/f1^2"), N, R);
    for (std::size_t n = 0; n < N; ++n) {
        if ((ds[n] == 0) != (p2[n] == 0) && failed(r, n, ds[n], p2[n], "D_S(n) = 0 iff p_2(n) = 0")) return r;
        if ((p23[n] == 0) == is_gen_pentagonal(n) &&
            failed(r, n, p23[n], is_gen_pentagonal(n) ? "pentagonal" : "not pentagonal", "p_2^(3)(n) = 0 iff not pentagonal"))
            return r;
    }
    return r;
}

VerifyReport D_S_identities(std::uint64_t nmax)
{
    const std::size_t N = nmax + 1;
    VerifyReport r = passing("D_S-3-dissection", N, std::nullopt,
                             "D_S(3n) = p_{4,9}(n), D_S(3n+1) = -p_{2,9}(n), D_S(3n+2) = -p_{1,9}(n)");
    const auto D = D_S_series(N);
    const std::size_t M = N / 3 + 1;
    const auto p4 = p_a9_series(4, M), p2 = p_a9_series(2, M), p1 = p_a9_series(1, M);
    for (std::size_t n = 0; n < N; ++n) {
        const std::size_t k = n / 3;
        BigInt expect;
        const char* cond;
        switch (n % 3) {
        case 0: expect = p4[k]; cond = "D_S(3n) = p_{4,9}(n)"; break;
        case 1: expect = -p2[k]; cond = "D_S(3n+1) = -p_{2,9}(n)"; break;
        default: expect = -p1[k]; cond = "D_S(3n+2) = -p_{1,9}(n)"; break;
        }
        if (D[n] != expect && failed(r, n, D[n], expect, cond)) return r;
        const int s = sgn(D[n]);
        if ((n % 3 == 0 ? s < 0 : s > 0) && failed(r, n, D[n], n % 3 == 0 ? ">= 0" : "<= 0", "sign pattern")) return r;
    }
    return r;
}

VerifyReport partition_examples()
{
    VerifyReport r = passing("partition-examples", 61, std::nullopt,
                             "p(55), p(60) and the pair counts for N = 55, 60, 53");
    const auto p = partition_counts(61);
    if (p[55] != 451276 && failed(r, 55, p[55], 451276, "p(55)")) return r;
    if (p[60] != 966467 && failed(r, 60, p[60], 966467, "p(60)")) return r;
    for (auto [n, expect] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{55, 8}, {60, 6}, {53, 9}}) {
        const auto got = rep_count({n, PartA::OddPartition, PartB::SSquare});
        if (got != expect && failed(r, n, got, expect, "pairs (m, k) with p(m) odd, k in S_square")) return r;
    }
    return r;
}

}  // namespace etaq
