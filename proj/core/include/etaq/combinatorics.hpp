#pragma once

#include "etaq/rings.hpp"
#include "etaq/verify.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace etaq {

// t in Z with t(3t-1)/2 = n; 0 is pentagonal with t = 0.
std::optional<std::int64_t> gen_pentagonal_index(std::uint64_t n);
bool is_gen_pentagonal(std::uint64_t n);
// {k^2 : k >= 1} u {2k^2 : k >= 1}; 0 is excluded.
bool is_S_square(std::uint64_t n);
// {3k^2 : k >= 1}
bool is_three_times_square(std::uint64_t n);

// p(0..N-1) from 1/f1.
std::vector<BigInt> partition_counts(std::size_t N);
BigInt partition_count(std::uint64_t n);
// Q(0..N-1) from f2/f1.
std::vector<BigInt> distinct_counts(std::size_t N);
BigInt distinct_count(std::uint64_t n);

enum class PartA { GenPentagonal, OddPartition };
enum class PartB { SSquare, ThreeTimesSquare };

struct RepCountQuery {
    std::uint64_t target = 1;
    PartA a = PartA::GenPentagonal;
    PartB b = PartB::SSquare;
};

// #{(m, k) : m in A, k in B, m + k = target}
std::uint64_t rep_count(const RepCountQuery& query);
std::vector<std::pair<std::uint64_t, std::uint64_t>> rep_pairs(const RepCountQuery& query);

// D_S(0..N-1): signed distinct-part counts with parts not divisible by 3, from f1/f3.
std::vector<BigInt> D_S_series(std::size_t N);
// Partitions into parts not congruent to 0, a or -a mod 9, from the restricted product.
std::vector<BigInt> p_a9_series(int a, std::size_t N);

VerifyReport verify_merca(std::uint64_t nmax);
VerifyReport verify_pent_plus_3square(std::uint64_t nmax);
VerifyReport bipartition_checks(std::uint64_t nmax);
VerifyReport D_S_identities(std::uint64_t nmax);
VerifyReport partition_examples();

}  // namespace etaq
