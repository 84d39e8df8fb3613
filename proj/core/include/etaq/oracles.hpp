#pragma once

#include "etaq/arith.hpp"
#include "etaq/rings.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace etaq {

enum class VanishingTrigger {
    None,
    // f1^10 and f1^5 f5, on 12n+5
    InertPrimeOddExponent,       // p = 3 (mod 4), odd exponent
    SplitPrimeDivisibleBy25,     // p = 5 (mod 12), odd exponent, 25 | x y (x-y)(x+y)
    ExponentNineModTen,          // p = 5 (mod 12), exponent = 9 (mod 10)
    ExponentTwentyFourMod25,     // p = 1 (mod 12), exponent = 24 (mod 25)
    TwoPrimesSingleFive,         // two primes each contributing exactly one factor of 5
    // f1 f5, on 4n+1
    NormPrimeExponentMinusOneMod25,  // p = 1, 9 (mod 20), exponent = -1 (mod 25)
    TwoNormPrimesMinusOneMod5,       // two such primes with exponent = -1 (mod 5)
    OtherPrimeOddExponent,           // p = 3, 7, 11, 13, 17, 19 (mod 20), odd exponent
};

std::string to_string(VanishingTrigger t);

struct VanishingVerdict {
    std::uint64_t n = 0;
    bool vanishes = false;
    VanishingTrigger trigger = VanishingTrigger::None;
    std::uint64_t prime = 0;         // witness prime for the trigger, 0 if none
    std::uint64_t second_prime = 0;  // second witness for the two-prime triggers
};

// Coefficient of q^n in f1^10 from (i/48)(H8 - H7) at 12n+5.
BigInt coeff_f1_10(std::uint64_t n);
// Coefficient of q^n in f1^5 f5 from S3 at 12n+5: d = -(3u + 4v)/24 for e = u + iv.
BigInt coeff_f1_5_f5(std::uint64_t n);

VanishingVerdict vanish25_f1_10(std::uint64_t n);
VanishingVerdict vanish25_f1_5_f5(std::uint64_t n);

// Coefficient of q^n in f1 f5 as the multiplicative function A at 4n+1.
BigInt A_coeff(std::uint64_t n);
BigInt A_prime_power(std::uint64_t p, unsigned m);
VanishingVerdict vanish25_A(std::uint64_t n);

// Necessary condition for the f1^6 coefficient at n to vanish mod 25.
bool necessary25_B(std::uint64_t n);

struct BResidue {
    GaussMod residue;  // mod 5 Z[i]
    int lemma_case;    // 1: p = 5; 2: p = 1, 9 (mod 20); 3: p = 3 (mod 4); 4: p = 13, 17 (mod 20)
};
// Residue of B_{p^m}, where q f4^6 = sum B_n q^n, modulo 5 Z[i].
BResidue B_prime_power_residue(std::uint64_t p, unsigned m);

enum class SerreCase { F1_10, F1_4 };
// F1_10: 12n+5 has a prime p = 3 (mod 4) to an odd power.
// F1_4:  6n+1 has a prime p = 2 (mod 3) to an odd power.
bool serre_vanishing_mod9(std::uint64_t n, SerreCase which);

// Oracle against direct expansion for every n < bound. Names:
//   f1_10, f1_5_f5  exact coefficient and mod-25 verdict
//   cd25            the two mod-25 index sets are equal
//   f1f5            A_coeff exact, vanish25_A against A_coeff and expansion mod 25
//   f1_6            f1^6 = 0 (mod 25) implies necessary25_B; strict subset of the f1 f5 set
//   serre_f1_10, serre_f1_4  predicate implies f1^7 f3 (or f1^7/f3) = 0 (mod 9)
struct EquivalenceReport {
    std::string name;
    std::size_t bound = 0;
    std::size_t oracle_count = 0;
    std::size_t expansion_count = 0;
    std::size_t discrepancies = 0;
    std::optional<std::uint64_t> first_discrepancy;
    std::string first_detail;
    double density = 0;  // share of n < bound vanishing in the expansion
    std::string detail;

    bool passed() const { return discrepancies == 0; }
};

const std::vector<std::string>& oracle_names();
EquivalenceReport oracle_equivalence(std::string_view name, std::size_t N);

}  // namespace etaq
