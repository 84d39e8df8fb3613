#include "etaq/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace etaq {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

std::int64_t isqrt(std::int64_t n)
{
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void add_si(BigInt& acc, i128 v)
{
    if (v >= INT64_MIN && v <= INT64_MAX) {
        auto s = static_cast<long>(v);
        if (s >= 0) mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(s));
        else mpz_sub_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(-(s + 1)) + 1);
        return;
    }
    BigInt hi(static_cast<long>(v >> 64));
    BigInt lo(static_cast<unsigned long>(static_cast<u128>(v) & UINT64_MAX));
    acc += (hi << 64) + lo;
}

// (u + iv)^t with coeff applied, exact in 128 bits for the norms used here.
std::pair<i128, i128> term_value(const ThetaTerm& t, std::int64_t u, std::int64_t v, unsigned power)
{
    i128 re = 1, im = 0;
    for (unsigned k = 0; k < power; ++k) {
        i128 nr = re * u - im * v;
        i128 ni = re * v + im * u;
        re = nr;
        im = ni;
    }
    return {re * t.coeff_re - im * t.coeff_im, re * t.coeff_im + im * t.coeff_re};
}

// Values k with |slope k + offset| <= bound.
std::pair<std::int64_t, std::int64_t> index_range(const AffineForm& f, std::int64_t bound)
{
    std::int64_t s = f.slope < 0 ? -f.slope : f.slope;
    return {ceil_div(-bound - f.offset, s), floor_div(bound - f.offset, s)};
}

std::int64_t abs_slope_at(const AffineForm& f, std::int64_t k)
{
    return (f.slope < 0 ? -f.slope : f.slope) * k + f.offset;
}

void check_family(const ThetaFamily& fam)
{
    for (const auto& t : fam.terms)
        if (t.u.slope == 0 || t.v.slope == 0) throw std::invalid_argument("theta family slopes must be nonzero");
    if (fam.power > 8) throw std::invalid_argument("theta family power above 8 is not supported");
}

}  // namespace

// Summing over all m in Z makes the sign of the slope irrelevant, so the
// enumeration runs over |slope|.
GaussSeries theta_family_series(const ThetaFamily& fam, std::size_t N)
{
    check_family(fam);
    GaussSeries out(GaussianInt{}, N);
    auto& c = out.raw();
    const auto bound = static_cast<std::int64_t>(N) - 1;
    for (const auto& t : fam.terms) {
        auto [mlo, mhi] = index_range(t.u, isqrt(bound));
        for (std::int64_t m = mlo; m <= mhi; ++m) {
            const std::int64_t u = abs_slope_at(t.u, m);
            const std::int64_t rest = bound - u * u;
            if (rest < 0) continue;
            auto [nlo, nhi] = index_range(t.v, isqrt(rest));
            for (std::int64_t n = nlo; n <= nhi; ++n) {
                const std::int64_t v = abs_slope_at(t.v, n);
                const auto e = static_cast<std::size_t>(u * u + v * v);
                auto [re, im] = term_value(t, u, v, fam.power);
                add_si(c[e].re, re);
                add_si(c[e].im, im);
            }
        }
    }
    return out;
}

Gaussian theta_family_coefficient(const ThetaFamily& fam, std::uint64_t n)
{
    check_family(fam);
    Gaussian acc{0L, 0L};
    const auto target = static_cast<std::int64_t>(n);
    const std::int64_t r = isqrt(target);
    for (const auto& t : fam.terms) {
        const std::int64_t su = t.u.slope < 0 ? -t.u.slope : t.u.slope;
        const std::int64_t sv = t.v.slope < 0 ? -t.v.slope : t.v.slope;
        for (std::int64_t u = -r; u <= r; ++u) {
            if (((u - t.u.offset) % su + su) % su != 0) continue;
            const std::int64_t rest = target - u * u;
            const std::int64_t w = isqrt(rest);
            if (w * w != rest) continue;
            for (std::int64_t v : {w, -w}) {
                if (((v - t.v.offset) % sv + sv) % sv == 0) {
                    auto [re, im] = term_value(t, u, v, fam.power);
                    add_si(acc.re, re);
                    add_si(acc.im, im);
                }
                if (w == 0) break;
            }
        }
    }
    return acc;
}

const ReferencePrefix& reference_prefix(std::string_view name)
{
    for (const auto& p : reference_prefixes())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown reference prefix " + std::string(name));
}

namespace {

ThetaFamily single(std::string name, AffineForm u, AffineForm v, unsigned power, bool halving = false)
{
    return ThetaFamily{std::move(name), {ThetaTerm{u, v}}, power, halving};
}

ThetaFamily h96(int j)
{
    const auto [uo, vo] = constant_tables().uv_offsets.at(static_cast<std::size_t>(j - 1));
    return single("H96_" + std::to_string(j), {30, uo}, {30, vo}, 2);
}

// Joins several families of equal power into one with scaled terms.
ThetaFamily combine(std::string name, const std::vector<std::pair<GaussUnit, ThetaFamily>>& parts)
{
    ThetaFamily out{std::move(name), {}, parts.front().second.power, false};
    for (const auto& [c, fam] : parts) {
        if (c.re == 0 && c.im == 0) continue;
        for (auto t : fam.terms) {
            std::int64_t re = c.re * t.coeff_re - c.im * t.coeff_im;
            std::int64_t im = c.re * t.coeff_im + c.im * t.coeff_re;
            t.coeff_re = re;
            t.coeff_im = im;
            out.terms.push_back(t);
        }
    }
    return out;
}

ThetaFamily table_combination(std::string name, const std::array<GaussUnit, 96>& coeffs)
{
    std::vector<std::pair<GaussUnit, ThetaFamily>> parts;
    for (int j = 1; j <= 96; ++j) parts.emplace_back(coeffs[static_cast<std::size_t>(j - 1)], h96(j));
    return combine(std::move(name), parts);
}

ThetaFamily basic_family(std::string_view name)
{
    if (name == "H3") return single("H3", {6, 1}, {6, 0}, 4);
    if (name == "H4") return single("H4", {6, 3}, {6, -2}, 4);
    if (name == "H7") return single("H7", {6, 1}, {6, -2}, 4);
    if (name == "H8") return single("H8", {6, 1}, {6, 2}, 4);
    if (name == "Theta6") return single("Theta6", {2, 1}, {2, 0}, 2, true);
    if (name.starts_with("H96_")) {
        const std::string digits(name.substr(4));
        int j = 0;
        try {
            std::size_t used = 0;
            j = std::stoi(digits, &used);
            if (used != digits.size()) j = 0;
        } catch (const std::exception&) {
            j = 0;
        }
        if (j >= 1 && j <= 96) return h96(j);
    }
    throw std::invalid_argument("unknown theta family " + std::string(name));
}

ThetaFamily family_or_combination(std::string_view name)
{
    if (name == "S1" || name == "S2") {
        const int s = name == "S1" ? 1 : -1;
        return combine(std::string(name), {{{1, 0}, basic_family("H3")},
                                           {{-1, 0}, basic_family("H4")},
                                           {{0, s}, basic_family("H7")},
                                           {{0, -s}, basic_family("H8")}});
    }
    const auto& t = constant_tables();
    if (name == "S3") return table_combination("S3", t.alpha);
    if (name == "S3bar") return table_combination("S3bar", t.beta);
    if (name == "S4") return table_combination("S4", t.gamma);
    if (name == "S4bar") return table_combination("S4bar", t.delta);
    return basic_family(name);
}

}  // namespace

ThetaFamily builtin_family(std::string_view name) { return family_or_combination(name); }

GaussSeries builtin_theta(std::string_view name, std::size_t N)
{
    return theta_family_series(family_or_combination(name), N);
}

std::vector<std::string> builtin_theta_names()
{
    std::vector<std::string> names = {"H3", "H4", "H7", "H8", "Theta6", "S1", "S2", "S3", "S3bar", "S4", "S4bar"};
    for (int j = 1; j <= 96; ++j) names.push_back("H96_" + std::to_string(j));
    return names;
}

}  // namespace etaq
