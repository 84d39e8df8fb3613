#pragma once

#include "etaq/rings.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace etaq {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending primes with positive exponents whose product is value.
struct PrimeFactorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> pairs;

    unsigned ord(std::uint64_t p) const;
};

// Trial division; n >= 1.
PrimeFactorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_below(std::uint64_t bound);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// x^2 + y^2 = p with x > y > 0.
struct TwoSquareRep {
    std::int64_t x;
    std::int64_t y;
};
// p prime and p = 1 (mod 4); throws ArithmeticError otherwise.
TwoSquareRep two_square(std::uint64_t p);

// X^2 + 5 Y^2 = p with X, Y >= 0.
struct NormFiveRep {
    std::int64_t X;
    std::int64_t Y;
};
std::optional<NormFiveRep> rep_x2_5y2(std::uint64_t p);

// a_{p^{k+1}} = a_{p^k} a_p - chi p^w a_{p^{k-1}}, a_{p^0} = 1, a_{p^1} = a_p.
// chi = 0 models a bad prime, where a_{p^k} = a_p^k.
struct HeckeLocal {
    std::uint64_t p;
    Gaussian a_p;
    int chi;
    unsigned weight_exponent;

    BigInt twist() const;  // chi * p^w

    // Weight 5: chi(p) = 1 for p = 1 (mod 4), -1 for p = 3 (mod 4).
    static HeckeLocal weight5(std::uint64_t p, Gaussian a_p);
    // Weight 3: chi(p) = 1 for p = 1, 3, 7, 9 (mod 20), -1 for 11, 13, 17, 19, 0 at p = 5.
    static HeckeLocal weight3(std::uint64_t p, Gaussian a_p);
};
using PrimePowerLocal = HeckeLocal;

int chi_mod4(std::uint64_t p);
int chi_mod20(std::uint64_t p);

Gaussian hecke_power(const HeckeLocal& loc, unsigned k);
// a_{p^0} .. a_{p^{count-1}}.
std::vector<Gaussian> hecke_sequence(const HeckeLocal& loc, unsigned count);

// The same recurrence on residues: a_{k+1} = a_k a_p - twist a_{k-1} in Z[i]/mZ[i].
std::vector<GaussMod> hecke_orbit_mod(GaussMod a_p, GaussMod twist, unsigned count, std::uint32_t m);
std::vector<GaussMod> hecke_orbit_mod(const HeckeLocal& loc, unsigned count, std::uint32_t m);

// Smallest period d such that seq[k + d] == seq[k] for every sampled k.
std::optional<std::size_t> pure_period(const std::vector<GaussMod>& seq);

}  // namespace etaq
