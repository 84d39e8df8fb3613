#pragma once

#include "etaq/series.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace etaq {

// J_{a,m} = (q^a, q^{m-a}, q^m; q^m)_inf; barred flips the sign of the first
// two arguments.
struct JSymbol {
    std::int64_t a;
    std::int64_t m;
    bool barred = false;

    std::string to_string() const;
    friend bool operator==(const JSymbol&, const JSymbol&) = default;
};

// s <- s * prod_{t>=0} (1 - sign q^{start + step t}), one factor at a time.
template <CoefficientRing R>
void apply_pochhammer(TruncatedSeries<R>& s, int sign, std::size_t start, std::size_t step)
{
    auto& c = s.raw();
    const R& r = s.ring();
    const std::size_t N = c.size();
    if (step == 0 || start == 0) throw std::invalid_argument("pochhammer start and step must be positive");
    for (std::size_t k = start; k < N; k += step) {
        for (std::size_t n = N; n-- > k;) {
            if (sign > 0) r.sub_to(c[n], c[n - k]);
            else r.add_to(c[n], c[n - k]);
        }
    }
}

template <CoefficientRing R>
TruncatedSeries<R> j_symbol_series(const JSymbol& sym, std::size_t N, const R& ring)
{
    if (sym.m <= 0 || sym.a <= 0 || sym.a >= sym.m)
        throw std::invalid_argument("J symbol needs 0 < a < m, got " + sym.to_string());
    const int sign = sym.barred ? -1 : 1;
    const auto a = static_cast<std::size_t>(sym.a);
    const auto m = static_cast<std::size_t>(sym.m);
    TruncatedSeries<R> s = one_series(ring, N);
    apply_pochhammer(s, sign, a, m);
    apply_pochhammer(s, sign, m - a, m);
    apply_pochhammer(s, 1, m, m);
    return s;
}

// a(q) = sum_{m,n} q^{m^2+mn+n^2}; for fixed n, 4Q = (2m+n)^2 + 3n^2.
template <CoefficientRing R>
TruncatedSeries<R> borwein_a(std::size_t N, const R& ring)
{
    std::vector<long> count(N, 0);
    const long four_n = 4 * static_cast<long>(N);
    for (long n = 0; 3 * n * n < four_n; ++n) {
        const long rest = four_n - 3 * n * n;
        long xmax = static_cast<long>(std::sqrt(double(rest)));
        while (xmax * xmax >= rest) --xmax;
        while ((xmax + 1) * (xmax + 1) < rest) ++xmax;
        for (long nn : {n, -n}) {
            long x = -xmax;
            if (((x - nn) % 2 + 2) % 2 != 0) ++x;
            for (; x <= xmax; x += 2) ++count[(x * x + 3 * n * n) / 4];
            if (n == 0) break;
        }
    }
    TruncatedSeries<R> s(ring, N);
    for (std::size_t k = 0; k < N; ++k) s.raw()[k] = ring.from_integer(count[k]);
    return s;
}

}  // namespace etaq
