#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace etaq {

using BigInt = mpz_class;

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class RingKind { ExactInt, ModInt, GaussianInt, GaussianModInt };

struct Gaussian {
    BigInt re;
    BigInt im;

    Gaussian() = default;
    Gaussian(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r, long i) : re(r), im(i) {}

    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

Gaussian operator+(const Gaussian& a, const Gaussian& b);
Gaussian operator-(const Gaussian& a, const Gaussian& b);
Gaussian operator*(const Gaussian& a, const Gaussian& b);
Gaussian conj(const Gaussian& a);
std::string to_string(const Gaussian& z);

// Components always in [0, m).
struct GaussMod {
    std::uint32_t re = 0;
    std::uint32_t im = 0;
    friend bool operator==(const GaussMod&, const GaussMod&) = default;
};

inline std::uint32_t reduce_big(const BigInt& v, std::uint32_t m)
{
    return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

class ExactInt {
public:
    using value_type = BigInt;
    static constexpr RingKind kind = RingKind::ExactInt;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const BigInt& v) const { return v; }
    value_type from_integer(long v) const { return v; }
    value_type normalize(value_type v) const { return v; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    void add_to(value_type& acc, const value_type& x) const { acc += x; }
    void sub_to(value_type& acc, const value_type& x) const { acc -= x; }
    void add_product(value_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    value_type unit_inverse(const value_type& a) const
    {
        if (!is_unit(a)) throw ArithmeticError("constant term " + a.get_str() + " is not a unit in ExactInt");
        return a;
    }

    std::string to_string(const value_type& a) const { return a.get_str(); }
    std::string describe() const { return "ExactInt"; }
    friend bool operator==(const ExactInt&, const ExactInt&) = default;
};

class ModInt {
public:
    using value_type = std::uint32_t;
    static constexpr RingKind kind = RingKind::ModInt;
    static constexpr std::uint64_t max_modulus = 1ull << 31;

    explicit ModInt(std::uint64_t m) : m_(check(m)) {}

    std::uint32_t modulus() const { return m_; }

    value_type zero() const { return 0; }
    value_type one() const { return m_ == 1 ? 0 : 1; }
    value_type from_integer(const BigInt& v) const { return reduce_big(v, m_); }
    value_type from_integer(long v) const
    {
        long r = v % static_cast<long>(m_);
        return static_cast<value_type>(r < 0 ? r + m_ : r);
    }
    value_type normalize(value_type v) const { return v % m_; }

    value_type add(value_type a, value_type b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= m_ ? s - m_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(a + std::uint64_t(m_) - b); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t(a) * b % m_); }
    value_type neg(value_type a) const { return a == 0 ? 0 : m_ - a; }
    void add_to(value_type& acc, value_type x) const { acc = add(acc, x); }
    void sub_to(value_type& acc, value_type x) const { acc = sub(acc, x); }
    void add_product(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }

    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    bool is_unit(value_type a) const;
    value_type unit_inverse(value_type a) const;

    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string describe() const { return "ModInt(" + std::to_string(m_) + ")"; }
    friend bool operator==(const ModInt&, const ModInt&) = default;

private:
    static std::uint32_t check(std::uint64_t m)
    {
        if (m < 2 || m > max_modulus) throw std::invalid_argument("modulus must lie in [2, 2^31], got " + std::to_string(m));
        return static_cast<std::uint32_t>(m);
    }
    std::uint32_t m_;
};

class GaussianInt {
public:
    using value_type = Gaussian;
    static constexpr RingKind kind = RingKind::GaussianInt;

    value_type zero() const { return {0L, 0L}; }
    value_type one() const { return {1L, 0L}; }
    value_type from_integer(const BigInt& v) const { return {v, BigInt(0)}; }
    value_type from_integer(long v) const { return {v, 0L}; }
    value_type from_gaussian(long re, long im) const { return {re, im}; }
    value_type normalize(value_type v) const { return v; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return {-a.re, -a.im}; }
    void add_to(value_type& acc, const value_type& x) const { acc.re += x.re; acc.im += x.im; }
    void sub_to(value_type& acc, const value_type& x) const { acc.re -= x.re; acc.im -= x.im; }
    void add_product(value_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_addmul(acc.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        mpz_submul(acc.re.get_mpz_t(), a.im.get_mpz_t(), b.im.get_mpz_t());
        mpz_addmul(acc.im.get_mpz_t(), a.re.get_mpz_t(), b.im.get_mpz_t());
        mpz_addmul(acc.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    }

    bool is_zero(const value_type& a) const { return sgn(a.re) == 0 && sgn(a.im) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    // Units are 1, -1, i, -i.
    bool is_unit(const value_type& a) const
    {
        return (sgn(a.im) == 0 && abs(a.re) == 1) || (sgn(a.re) == 0 && abs(a.im) == 1);
    }
    value_type unit_inverse(const value_type& a) const
    {
        if (!is_unit(a)) throw ArithmeticError("constant term " + etaq::to_string(a) + " is not a unit in GaussianInt");
        return conj(a);
    }

    std::string to_string(const value_type& a) const { return etaq::to_string(a); }
    std::string describe() const { return "GaussianInt"; }
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

// Z[i]/mZ[i]; used to reduce Gaussian series modulo m.
class GaussianModInt {
public:
    using value_type = GaussMod;
    static constexpr RingKind kind = RingKind::GaussianModInt;

    explicit GaussianModInt(std::uint64_t m) : base_(m) {}

    std::uint32_t modulus() const { return base_.modulus(); }
    const ModInt& base() const { return base_; }

    value_type zero() const { return {}; }
    value_type one() const { return {base_.one(), 0}; }
    value_type from_integer(const BigInt& v) const { return {base_.from_integer(v), 0}; }
    value_type from_integer(long v) const { return {base_.from_integer(v), 0}; }
    value_type from_gaussian(const Gaussian& z) const { return {base_.from_integer(z.re), base_.from_integer(z.im)}; }
    value_type from_gaussian(long re, long im) const { return {base_.from_integer(re), base_.from_integer(im)}; }
    value_type normalize(value_type v) const { return {base_.normalize(v.re), base_.normalize(v.im)}; }

    value_type add(value_type a, value_type b) const { return {base_.add(a.re, b.re), base_.add(a.im, b.im)}; }
    value_type sub(value_type a, value_type b) const { return {base_.sub(a.re, b.re), base_.sub(a.im, b.im)}; }
    value_type mul(value_type a, value_type b) const
    {
        return {base_.sub(base_.mul(a.re, b.re), base_.mul(a.im, b.im)),
                base_.add(base_.mul(a.re, b.im), base_.mul(a.im, b.re))};
    }
    value_type neg(value_type a) const { return {base_.neg(a.re), base_.neg(a.im)}; }
    void add_to(value_type& acc, value_type x) const { acc = add(acc, x); }
    void sub_to(value_type& acc, value_type x) const { acc = sub(acc, x); }
    void add_product(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }

    bool is_zero(value_type a) const { return a.re == 0 && a.im == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    // a is a unit iff its norm is a unit mod m.
    bool is_unit(value_type a) const { return base_.is_unit(norm(a)); }
    value_type unit_inverse(value_type a) const
    {
        if (!is_unit(a)) throw ArithmeticError("constant term " + to_string(a) + " is not a unit in " + describe());
        std::uint32_t ninv = base_.unit_inverse(norm(a));
        return {base_.mul(a.re, ninv), base_.mul(base_.neg(a.im), ninv)};
    }

    std::string to_string(value_type a) const { return "(" + std::to_string(a.re) + "," + std::to_string(a.im) + ")"; }
    std::string describe() const { return "GaussianModInt(" + std::to_string(modulus()) + ")"; }
    friend bool operator==(const GaussianModInt&, const GaussianModInt&) = default;

private:
    std::uint32_t norm(value_type a) const { return base_.add(base_.mul(a.re, a.re), base_.mul(a.im, a.im)); }
    ModInt base_;
};

template <class R>
concept CoefficientRing = std::equality_comparable<R> &&
    requires(const R& r, typename R::value_type& acc, const typename R::value_type& x, const BigInt& big) {
        { r.zero() } -> std::same_as<typename R::value_type>;
        { r.one() } -> std::same_as<typename R::value_type>;
        { r.from_integer(big) } -> std::same_as<typename R::value_type>;
        { r.from_integer(1L) } -> std::same_as<typename R::value_type>;
        { r.normalize(x) } -> std::same_as<typename R::value_type>;
        { r.add(x, x) } -> std::same_as<typename R::value_type>;
        { r.sub(x, x) } -> std::same_as<typename R::value_type>;
        { r.mul(x, x) } -> std::same_as<typename R::value_type>;
        { r.neg(x) } -> std::same_as<typename R::value_type>;
        r.add_to(acc, x);
        r.sub_to(acc, x);
        r.add_product(acc, x, x);
        { r.is_zero(x) } -> std::convertible_to<bool>;
        { r.equal(x, x) } -> std::convertible_to<bool>;
        { r.is_unit(x) } -> std::convertible_to<bool>;
        { r.unit_inverse(x) } -> std::same_as<typename R::value_type>;
        { r.to_string(x) } -> std::same_as<std::string>;
        { r.describe() } -> std::same_as<std::string>;
    };

template <class R>
concept GaussianRing = CoefficientRing<R> && (R::kind == RingKind::GaussianInt || R::kind == RingKind::GaussianModInt);

}  // namespace etaq
