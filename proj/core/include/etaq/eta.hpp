#pragma once

#include "etaq/series.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace etaq {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column)
    {
    }
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct EtaFactor {
    std::uint32_t dilation;
    std::int64_t exponent;
    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

// Product of f_j^{n_j}, f_j = (q^j; q^j)_inf. Factors are sorted by dilation,
// dilations are distinct and every exponent is nonzero.
class EtaQuotient {
public:
    EtaQuotient() = default;
    explicit EtaQuotient(std::vector<EtaFactor> factors);

    static EtaQuotient f(std::uint32_t j, std::int64_t e = 1) { return EtaQuotient({{j, e}}); }

    std::span<const EtaFactor> factors() const { return factors_; }
    std::int64_t exponent_of(std::uint32_t j) const;
    bool is_one() const { return factors_.empty(); }

    std::string to_string() const;

    EtaQuotient operator*(const EtaQuotient& o) const;
    EtaQuotient operator/(const EtaQuotient& o) const;
    EtaQuotient pow(std::int64_t e) const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::vector<EtaFactor> factors_;
};

EtaQuotient parse_eta(std::string_view text);

struct PentagonalTerm {
    std::size_t exponent;
    int sign;
};

// Nonzero terms of f_1 = sum_t (-1)^t q^{t(3t-1)/2} below N, ascending.
std::vector<PentagonalTerm> pentagonal_terms(std::size_t N);

namespace detail {

// c <- c * f_j, in place. Descending order reads only unmodified entries.
template <CoefficientRing R>
void multiply_by_fj(std::vector<typename R::value_type>& c, const R& ring, std::size_t j,
                    std::span<const PentagonalTerm> pent)
{
    const std::size_t N = c.size();
    for (std::size_t n = N; n-- > 0;) {
        for (std::size_t t = 1; t < pent.size(); ++t) {
            const std::size_t off = pent[t].exponent * j;
            if (off > n) break;
            if (pent[t].sign > 0) ring.add_to(c[n], c[n - off]);
            else ring.sub_to(c[n], c[n - off]);
        }
    }
}

// c <- c / f_j, in place. Ascending order reads only finished entries.
template <CoefficientRing R>
void divide_by_fj(std::vector<typename R::value_type>& c, const R& ring, std::size_t j,
                  std::span<const PentagonalTerm> pent)
{
    const std::size_t N = c.size();
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t t = 1; t < pent.size(); ++t) {
            const std::size_t off = pent[t].exponent * j;
            if (off > n) break;
            if (pent[t].sign > 0) ring.sub_to(c[n], c[n - off]);
            else ring.add_to(c[n], c[n - off]);
        }
    }
}

}  // namespace detail

// Multiplies s by the eta quotient using one sparse pass per unit of exponent.
template <CoefficientRing R>
void apply_eta(TruncatedSeries<R>& s, const EtaQuotient& eq)
{
    auto pent = pentagonal_terms(s.trunc());
    for (const auto& f : eq.factors()) {
        for (std::int64_t k = 0; k < (f.exponent < 0 ? -f.exponent : f.exponent); ++k) {
            if (f.exponent > 0) detail::multiply_by_fj(s.raw(), s.ring(), f.dilation, pent);
            else detail::divide_by_fj(s.raw(), s.ring(), f.dilation, pent);
        }
    }
}

template <CoefficientRing R>
TruncatedSeries<R> eta_series(const EtaQuotient& eq, std::size_t N, const R& ring)
{
    TruncatedSeries<R> s = one_series(ring, N);
    apply_eta(s, eq);
    return s;
}

// Reference route: pow, dilate and mul from series_core only.
template <CoefficientRing R>
TruncatedSeries<R> eta_series_generic(const EtaQuotient& eq, std::size_t N, const R& ring)
{
    TruncatedSeries<R> f1(ring, N);
    for (const auto& t : pentagonal_terms(N)) f1.set(t.exponent, ring.from_integer(long(t.sign)));
    TruncatedSeries<R> out = one_series(ring, N);
    for (const auto& f : eq.factors()) out = mul(out, pow(dilate(f1, f.dilation), f.exponent));
    return out;
}

}  // namespace etaq
