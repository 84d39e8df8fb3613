#pragma once

#include "etaq/rings.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace etaq {

class TruncationMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnitConstantTerm : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

// Dense truncated power series sum_{n<N} c_n q^n. Every coefficient is a
// canonical ring element; the length of the coefficient vector is N.
template <CoefficientRing R>
class TruncatedSeries {
public:
    using ring_type = R;
    using value_type = typename R::value_type;

    TruncatedSeries(R ring, std::size_t trunc) : ring_(std::move(ring)), c_(trunc, ring_.zero()) {}

    TruncatedSeries(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs))
    {
        for (auto& v : c_) v = ring_.normalize(std::move(v));
    }

    const R& ring() const { return ring_; }
    std::size_t trunc() const { return c_.size(); }
    const value_type& operator[](std::size_t n) const { return c_[n]; }
    std::span<const value_type> coeffs() const { return c_; }

    void set(std::size_t n, value_type v) { c_.at(n) = ring_.normalize(std::move(v)); }

    // Caller promises to keep coefficients canonical.
    std::vector<value_type>& raw() { return c_; }
    std::vector<value_type> release() && { return std::move(c_); }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [&](const value_type& v) { return ring_.is_zero(v); });
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (!(a.ring_ == b.ring_) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t n = 0; n < a.c_.size(); ++n)
            if (!a.ring_.equal(a.c_[n], b.c_[n])) return false;
        return true;
    }

private:
    R ring_;
    std::vector<value_type> c_;
};

using ExactSeries = TruncatedSeries<ExactInt>;
using ModSeries = TruncatedSeries<ModInt>;
using GaussSeries = TruncatedSeries<GaussianInt>;
using GaussModSeries = TruncatedSeries<GaussianModInt>;

template <CoefficientRing R>
struct LinearTerm {
    typename R::value_type scalar;
    TruncatedSeries<R> series;
};

template <CoefficientRing R>
struct DissectionResult {
    std::size_t modulus = 0;
    std::size_t source_trunc = 0;
    std::vector<TruncatedSeries<R>> components;
};

namespace detail {

template <CoefficientRing R>
void require_compatible(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b, const char* op)
{
    if (!(a.ring() == b.ring()))
        throw RingMismatch(std::string(op) + ": ring " + a.ring().describe() + " vs " + b.ring().describe());
    if (a.trunc() != b.trunc())
        throw TruncationMismatch(std::string(op) + ": truncation " + std::to_string(a.trunc()) + " vs " +
                                 std::to_string(b.trunc()));
}

template <CoefficientRing R>
std::vector<std::size_t> support(const TruncatedSeries<R>& a)
{
    std::vector<std::size_t> s;
    for (std::size_t n = 0; n < a.trunc(); ++n)
        if (!a.ring().is_zero(a[n])) s.push_back(n);
    return s;
}

// Residue-class accumulation; m <= 2^16 keeps every product below 2^32 and
// a sum of up to 2^32 such products inside 64 bits.
inline std::vector<std::uint32_t> mul_mod_small(const std::vector<std::size_t>& supp, std::span<const std::uint32_t> a,
                                                std::span<const std::uint32_t> b, std::uint32_t m)
{
    const std::size_t N = a.size();
    std::vector<std::uint64_t> acc(N, 0);
    for (std::size_t i : supp) {
        const std::uint64_t ai = a[i];
        std::uint64_t* dst = acc.data() + i;
        const std::uint32_t* src = b.data();
        const std::size_t len = N - i;
        for (std::size_t k = 0; k < len; ++k) dst[k] += ai * src[k];
    }
    std::vector<std::uint32_t> out(N);
    for (std::size_t n = 0; n < N; ++n) out[n] = static_cast<std::uint32_t>(acc[n] % m);
    return out;
}

}  // namespace detail

template <CoefficientRing R>
TruncatedSeries<R> make_series(const R& ring, std::size_t trunc,
                               const std::vector<std::pair<std::size_t, typename R::value_type>>& terms)
{
    if (trunc == 0) throw std::invalid_argument("truncation order must be at least 1");
    TruncatedSeries<R> s(ring, trunc);
    std::vector<bool> seen(trunc, false);
    for (const auto& [e, v] : terms) {
        if (e >= trunc)
            throw std::invalid_argument("make_series: exponent " + std::to_string(e) + " >= truncation " +
                                        std::to_string(trunc));
        if (seen[e]) throw std::invalid_argument("make_series: duplicate exponent " + std::to_string(e));
        seen[e] = true;
        s.raw()[e] = ring.normalize(v);
    }
    return s;
}

template <CoefficientRing R>
TruncatedSeries<R> one_series(const R& ring, std::size_t trunc)
{
    TruncatedSeries<R> s(ring, trunc);
    if (trunc > 0) s.raw()[0] = ring.one();
    return s;
}

template <CoefficientRing R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& a, std::size_t trunc)
{
    if (trunc > a.trunc())
        throw TruncationMismatch("cannot extend truncation from " + std::to_string(a.trunc()) + " to " +
                                 std::to_string(trunc));
    std::vector<typename R::value_type> c(a.coeffs().begin(), a.coeffs().begin() + trunc);
    return TruncatedSeries<R>(a.ring(), std::move(c));
}

template <CoefficientRing R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    detail::require_compatible(a, b, "add");
    TruncatedSeries<R> out = a;
    for (std::size_t n = 0; n < a.trunc(); ++n) a.ring().add_to(out.raw()[n], b[n]);
    return out;
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    detail::require_compatible(a, b, "sub");
    TruncatedSeries<R> out = a;
    for (std::size_t n = 0; n < a.trunc(); ++n) a.ring().sub_to(out.raw()[n], b[n]);
    return out;
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a)
{
    TruncatedSeries<R> out = a;
    for (auto& v : out.raw()) v = a.ring().neg(v);
    return out;
}

template <CoefficientRing R>
TruncatedSeries<R> scale(const typename R::value_type& s, const TruncatedSeries<R>& a)
{
    const R& r = a.ring();
    auto sv = r.normalize(s);
    TruncatedSeries<R> out(r, a.trunc());
    if (r.is_zero(sv)) return out;
    for (std::size_t n = 0; n < a.trunc(); ++n)
        if (!r.is_zero(a[n])) out.raw()[n] = r.mul(sv, a[n]);
    return out;
}

template <CoefficientRing R>
TruncatedSeries<R> mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    detail::require_compatible(a, b, "mul");
    const R& r = a.ring();
    const std::size_t N = a.trunc();
    auto sa = detail::support(a);
    auto sb = detail::support(b);
    const bool swap = sb.size() < sa.size();
    const auto& x = swap ? b : a;
    const auto& y = swap ? a : b;
    const auto& sx = swap ? sb : sa;

    if constexpr (R::kind == RingKind::ModInt) {
        if (r.modulus() <= (1u << 16)) {
            return TruncatedSeries<R>(r, detail::mul_mod_small(sx, x.coeffs(), y.coeffs(), r.modulus()));
        }
    }

    TruncatedSeries<R> out(r, N);
    auto& o = out.raw();
    const auto& sy = swap ? sa : sb;
    for (std::size_t i : sx) {
        const auto& xi = x[i];
        for (std::size_t k : sy) {
            if (i + k >= N) break;
            r.add_product(o[i + k], xi, y[k]);
        }
    }
    return out;
}

template <CoefficientRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    return mul(a, b);
}

template <CoefficientRing R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& a)
{
    const R& r = a.ring();
    const std::size_t N = a.trunc();
    if (N == 0) return a;
    if (!r.is_unit(a[0]))
        throw NonUnitConstantTerm("invert: constant term " + r.to_string(a[0]) + " is not a unit in " + r.describe());
    const auto inv0 = r.unit_inverse(a[0]);
    auto sa = detail::support(a);
    TruncatedSeries<R> out(r, N);
    auto& b = out.raw();
    b[0] = inv0;
    for (std::size_t n = 1; n < N; ++n) {
        auto s = r.zero();
        for (std::size_t k : sa) {
            if (k == 0) continue;
            if (k > n) break;
            r.add_product(s, a[k], b[n - k]);
        }
        b[n] = r.neg(r.mul(inv0, s));
    }
    return out;
}

template <CoefficientRing R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& a, long long e)
{
    if (e < 0) return pow(invert(a), -e);
    TruncatedSeries<R> result = one_series(a.ring(), a.trunc());
    TruncatedSeries<R> base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

template <CoefficientRing R>
TruncatedSeries<R> linear_combine(const std::vector<LinearTerm<R>>& terms)
{
    if (terms.empty()) throw std::invalid_argument("linear_combine: no terms");
    const R& r = terms.front().series.ring();
    TruncatedSeries<R> out(r, terms.front().series.trunc());
    for (const auto& t : terms) {
        detail::require_compatible(out, t.series, "linear_combine");
        auto s = r.normalize(t.scalar);
        if (r.is_zero(s)) continue;
        for (std::size_t n = 0; n < out.trunc(); ++n)
            if (!r.is_zero(t.series[n])) r.add_product(out.raw()[n], s, t.series[n]);
    }
    return out;
}

// f(q) -> f(q^k); the result keeps the truncation of a.
template <CoefficientRing R>
TruncatedSeries<R> dilate(const TruncatedSeries<R>& a, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("dilate: factor must be positive");
    TruncatedSeries<R> out(a.ring(), a.trunc());
    for (std::size_t n = 0; n * k < a.trunc(); ++n) out.raw()[n * k] = a[n];
    return out;
}

// q^s f(q) truncated at the same order.
template <CoefficientRing R>
TruncatedSeries<R> shift(const TruncatedSeries<R>& a, std::size_t s)
{
    TruncatedSeries<R> out(a.ring(), a.trunc());
    for (std::size_t n = 0; n + s < a.trunc(); ++n) out.raw()[n + s] = a[n];
    return out;
}

// Component r holds c_{mn+r} for mn+r < N.
template <CoefficientRing R>
DissectionResult<R> dissect(const TruncatedSeries<R>& a, std::size_t m)
{
    if (m == 0) throw std::invalid_argument("dissect: modulus must be positive");
    DissectionResult<R> d;
    d.modulus = m;
    d.source_trunc = a.trunc();
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t len = r < a.trunc() ? (a.trunc() - r + m - 1) / m : 0;
        std::vector<typename R::value_type> c;
        c.reserve(len);
        for (std::size_t n = 0; n < len; ++n) c.push_back(a[m * n + r]);
        d.components.emplace_back(a.ring(), std::move(c));
    }
    return d;
}

template <CoefficientRing R>
TruncatedSeries<R> reassemble(const DissectionResult<R>& d, std::size_t trunc)
{
    if (d.components.empty()) throw std::invalid_argument("reassemble: empty dissection");
    const R& r = d.components.front().ring();
    TruncatedSeries<R> out(r, trunc);
    for (std::size_t n = 0; n < trunc; ++n) {
        const auto& comp = d.components[n % d.modulus];
        std::size_t idx = n / d.modulus;
        if (idx >= comp.trunc())
            throw TruncationMismatch("reassemble: component " + std::to_string(n % d.modulus) + " too short for order " +
                                     std::to_string(trunc));
        out.raw()[n] = comp[idx];
    }
    return out;
}

// Keep only coefficients with n = r (mod m).
template <CoefficientRing R>
TruncatedSeries<R> residue_part(const TruncatedSeries<R>& a, std::size_t m, std::size_t r)
{
    TruncatedSeries<R> out(a.ring(), a.trunc());
    for (std::size_t n = r % m; n < a.trunc(); n += m) out.raw()[n] = a[n];
    return out;
}

template <CoefficientRing R>
std::optional<std::size_t> first_mismatch(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    detail::require_compatible(a, b, "compare");
    for (std::size_t n = 0; n < a.trunc(); ++n)
        if (!a.ring().equal(a[n], b[n])) return n;
    return std::nullopt;
}

template <CoefficientRing R>
std::optional<std::size_t> first_nonzero(const TruncatedSeries<R>& a)
{
    for (std::size_t n = 0; n < a.trunc(); ++n)
        if (!a.ring().is_zero(a[n])) return n;
    return std::nullopt;
}

ModSeries reduce_mod(const ExactSeries& a, std::uint64_t m);
GaussModSeries reduce_mod(const GaussSeries& a, std::uint64_t m);
GaussSeries to_gaussian(const ExactSeries& a);
GaussSeries conjugate(const GaussSeries& a);
ExactSeries real_part(const GaussSeries& a);
ExactSeries imag_part(const GaussSeries& a);

}  // namespace etaq
