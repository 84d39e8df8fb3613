#include "etaq/arith.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace etaq {

unsigned PrimeFactorization::ord(std::uint64_t p) const
{
    for (const auto& pp : pairs)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

PrimeFactorization factorize(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    PrimeFactorization f;
    f.value = n;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.pairs.push_back({p, e});
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) f.pairs.push_back({n, 1});
    return f;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t p = 5; p * p <= n; p += 6)
        if (n % p == 0 || n % (p + 2) == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 3) return out;
    std::vector<bool> comp(bound, false);
    for (std::uint64_t i = 2; i < bound; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < bound; j += i) comp[j] = true;
    }
    return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    __extension__ using u128 = unsigned __int128;
    u128 r = 1 % m, x = b % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

TwoSquareRep two_square(std::uint64_t p)
{
    if (p % 4 != 1 || !is_prime(p))
        throw ArithmeticError("two_square: " + std::to_string(p) + " is not a prime congruent to 1 mod 4");
    for (std::int64_t y = 1; 2 * y * y < static_cast<std::int64_t>(p); ++y) {
        const std::int64_t rest = static_cast<std::int64_t>(p) - y * y;
        auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        while (x * x > rest) --x;
        while ((x + 1) * (x + 1) <= rest) ++x;
        if (x * x == rest) return {x, y};
    }
    throw ArithmeticError("two_square: no representation found for " + std::to_string(p));
}

std::optional<NormFiveRep> rep_x2_5y2(std::uint64_t p)
{
    const auto n = static_cast<std::int64_t>(p);
    for (std::int64_t Y = 0; 5 * Y * Y <= n; ++Y) {
        const std::int64_t rest = n - 5 * Y * Y;
        auto X = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        while (X * X > rest) --X;
        while ((X + 1) * (X + 1) <= rest) ++X;
        if (X * X == rest) return NormFiveRep{X, Y};
    }
    return std::nullopt;
}

int chi_mod4(std::uint64_t p)
{
    if (p % 2 == 0) return 0;
    return p % 4 == 1 ? 1 : -1;
}

int chi_mod20(std::uint64_t p)
{
    switch (p % 20) {
    case 1: case 3: case 7: case 9: return 1;
    case 11: case 13: case 17: case 19: return -1;
    default: return 0;
    }
}

BigInt HeckeLocal::twist() const
{
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), p, weight_exponent);
    return chi * w;
}

HeckeLocal HeckeLocal::weight5(std::uint64_t p, Gaussian a_p) { return {p, std::move(a_p), chi_mod4(p), 4}; }

HeckeLocal HeckeLocal::weight3(std::uint64_t p, Gaussian a_p) { return {p, std::move(a_p), chi_mod20(p), 2}; }

std::vector<Gaussian> hecke_sequence(const HeckeLocal& loc, unsigned count)
{
    std::vector<Gaussian> out;
    if (count == 0) return out;
    out.push_back({1L, 0L});
    if (count == 1) return out;
    out.push_back(loc.a_p);
    const Gaussian w{loc.twist(), BigInt(0)};
    for (unsigned k = 2; k < count; ++k) out.push_back(out[k - 1] * loc.a_p - w * out[k - 2]);
    return out;
}

Gaussian hecke_power(const HeckeLocal& loc, unsigned k) { return hecke_sequence(loc, k + 1).back(); }

std::vector<GaussMod> hecke_orbit_mod(GaussMod a_p, GaussMod twist, unsigned count, std::uint32_t m)
{
    GaussianModInt r(m);
    std::vector<GaussMod> out;
    if (count == 0) return out;
    out.push_back(r.one());
    if (count == 1) return out;
    out.push_back(r.normalize(a_p));
    for (unsigned k = 2; k < count; ++k) out.push_back(r.sub(r.mul(out[k - 1], a_p), r.mul(twist, out[k - 2])));
    return out;
}

std::vector<GaussMod> hecke_orbit_mod(const HeckeLocal& loc, unsigned count, std::uint32_t m)
{
    GaussianModInt r(m);
    return hecke_orbit_mod(r.from_gaussian(loc.a_p), r.from_gaussian(Gaussian{loc.twist(), BigInt(0)}), count, m);
}

std::optional<std::size_t> pure_period(const std::vector<GaussMod>& seq)
{
    for (std::size_t d = 1; 2 * d <= seq.size(); ++d) {
        bool ok = true;
        for (std::size_t k = 0; k + d < seq.size() && ok; ++k) ok = seq[k] == seq[k + d];
        if (ok) return d;
    }
    return std::nullopt;
}

}  // namespace etaq
