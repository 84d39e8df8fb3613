#pragma once

#include "etaq/series.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace etaq {

struct AffineForm {
    std::int64_t slope;
    std::int64_t offset;
    std::int64_t at(std::int64_t k) const { return slope * k + offset; }
};

struct GaussUnit {
    int re;
    int im;
    friend bool operator==(const GaussUnit&, const GaussUnit&) = default;
};

struct ThetaTerm {
    AffineForm u;
    AffineForm v;
    std::int64_t coeff_re = 1;
    std::int64_t coeff_im = 0;
};

// sum over terms and all (m, n) of coeff * (u(m) + i v(n))^power q^{u^2+v^2}.
// With halving the intended series is half of that sum; the library keeps
// the raw sum and callers compare against twice the other side.
struct ThetaFamily {
    std::string name;
    std::vector<ThetaTerm> terms;
    unsigned power = 0;
    bool halving = false;
};

struct ConstantTables {
    // (u offset, v offset) for u = 30m + u_off, v = 30n + v_off.
    std::array<std::pair<int, int>, 96> uv_offsets;
    std::array<GaussUnit, 96> alpha;
    std::array<GaussUnit, 96> beta;
    std::array<GaussUnit, 96> gamma;
    std::array<GaussUnit, 96> delta;
};

const ConstantTables& constant_tables();

struct PrefixTerm {
    std::uint32_t exponent;
    long re;
    long im;
};

// Published coefficient prefixes through q^197; absent exponents are zero.
struct ReferencePrefix {
    std::string name;
    const std::vector<PrefixTerm>& terms;
};
const std::vector<ReferencePrefix>& reference_prefixes();
const ReferencePrefix& reference_prefix(std::string_view name);

GaussSeries theta_family_series(const ThetaFamily& fam, std::size_t N);
Gaussian theta_family_coefficient(const ThetaFamily& fam, std::uint64_t n);

// H3, H4, H7, H8 (power 4); H96_1 .. H96_96 (power 2, offsets from the
// constant table); Theta6 = sum (2m+1+2ni)^2 q^{norm}, flagged halving.
ThetaFamily builtin_family(std::string_view name);

// Families above plus S1, S2, S3, S3bar, S4, S4bar.
GaussSeries builtin_theta(std::string_view name, std::size_t N);
std::vector<std::string> builtin_theta_names();

}  // namespace etaq
