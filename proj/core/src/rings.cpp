#include "etaq/rings.hpp"
#include "etaq/series.hpp"

#include <numeric>

namespace etaq {

Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
Gaussian operator*(const Gaussian& a, const Gaussian& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Gaussian conj(const Gaussian& a) { return {a.re, -a.im}; }

std::string to_string(const Gaussian& z)
{
    if (sgn(z.im) == 0) return z.re.get_str();
    std::string im;
    if (z.im == 1) im = "i";
    else if (z.im == -1) im = "-i";
    else im = z.im.get_str() + "i";
    if (sgn(z.re) == 0) return im;
    return z.re.get_str() + (sgn(z.im) > 0 ? "+" : "") + im;
}

bool ModInt::is_unit(value_type a) const { return std::gcd(a, m_) == 1; }

ModInt::value_type ModInt::unit_inverse(value_type a) const
{
    long long t = 0, nt = 1, r = m_, nr = a % m_;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw ArithmeticError("constant term " + std::to_string(a) + " is not a unit in " + describe());
    if (t < 0) t += m_;
    return static_cast<value_type>(t);
}

ModSeries reduce_mod(const ExactSeries& a, std::uint64_t m)
{
    ModInt r(m);
    std::vector<std::uint32_t> c(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n) c[n] = r.from_integer(a[n]);
    return ModSeries(r, std::move(c));
}

GaussModSeries reduce_mod(const GaussSeries& a, std::uint64_t m)
{
    GaussianModInt r(m);
    std::vector<GaussMod> c(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n) c[n] = r.from_gaussian(a[n]);
    return GaussModSeries(r, std::move(c));
}

GaussSeries to_gaussian(const ExactSeries& a)
{
    std::vector<Gaussian> c(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n) c[n].re = a[n];
    return GaussSeries(GaussianInt{}, std::move(c));
}

GaussSeries conjugate(const GaussSeries& a)
{
    std::vector<Gaussian> c(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n) c[n] = conj(a[n]);
    return GaussSeries(GaussianInt{}, std::move(c));
}

ExactSeries real_part(const GaussSeries& a)
{
    std::vector<BigInt> c(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n) c[n] = a[n].re;
    return ExactSeries(ExactInt{}, std::move(c));
}

ExactSeries imag_part(const GaussSeries& a)
{
    std::vector<BigInt> c(a.trunc());
    for (std::size_t n = 0; n < a.trunc(); ++n) c[n] = a[n].im;
    return ExactSeries(ExactInt{}, std::move(c));
}

}  // namespace etaq
