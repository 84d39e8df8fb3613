#include "etaq/eta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace etaq {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("merged exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

}  // namespace

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors)
{
    std::map<std::uint32_t, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.dilation == 0) throw std::invalid_argument("eta dilation must be positive");
        auto& e = merged[f.dilation];
        e = checked_add(e, f.exponent);
    }
    for (const auto& [j, e] : merged)
        if (e != 0) factors_.push_back({j, e});
}

std::int64_t EtaQuotient::exponent_of(std::uint32_t j) const
{
    for (const auto& f : factors_)
        if (f.dilation == j) return f.exponent;
    return 0;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const
{
    std::vector<EtaFactor> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return EtaQuotient(std::move(all));
}

EtaQuotient EtaQuotient::operator/(const EtaQuotient& o) const { return *this * o.pow(-1); }

EtaQuotient EtaQuotient::pow(std::int64_t e) const
{
    std::vector<EtaFactor> out;
    for (const auto& f : factors_) out.push_back({f.dilation, checked_mul(f.exponent, e)});
    return EtaQuotient(std::move(out));
}

// Numerator factors first, then "/f_j^e" for each negative exponent:
// f1^2*f2^3/f4, 1/f1, 1 for the empty product.
std::string EtaQuotient::to_string() const
{
    auto term = [](const EtaFactor& f, std::int64_t e) {
        std::string s = "f" + std::to_string(f.dilation);
        if (e != 1) s += "^" + std::to_string(e);
        return s;
    };
    std::string num, den;
    for (const auto& f : factors_) {
        if (f.exponent > 0) {
            if (!num.empty()) num += "*";
            num += term(f, f.exponent);
        } else {
            den += "/" + term(f, -f.exponent);
        }
    }
    if (num.empty()) num = "1";
    return num + den;
}

EtaQuotient parse_eta(std::string_view text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](bool allow_sign) -> std::int64_t {
        skip_ws();
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string_view digits = text.substr(start, pos - start);
        if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
            if (ec == std::errc::result_out_of_range) throw std::overflow_error("integer out of range in eta expression");
            throw ParseError("expected integer", start);
        }
        return v;
    };

    std::vector<EtaFactor> factors;
    int sign = 1;
    bool expect_atom = true;
    skip_ws();
    if (pos == text.size()) throw ParseError("empty eta expression", 0);
    while (true) {
        skip_ws();
        if (!expect_atom) {
            if (pos == text.size()) break;
            char c = text[pos];
            if (c == '*') sign = 1;
            else if (c == '/') sign = -1;
            else throw ParseError(std::string("unexpected character '") + c + "'", pos);
            ++pos;
            expect_atom = true;
            continue;
        }
        if (pos == text.size()) throw ParseError("expression ends after operator", pos);
        if (text[pos] == '(') {
            throw ParseError("parentheses are not part of the grammar", pos);
        }
        if (text[pos] == '1' && (pos + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;  // literal 1, as in 1/f1
        } else {
            if (text[pos] != 'f') throw ParseError("expected f<j>", pos);
            ++pos;
            std::size_t jcol = pos;
            std::int64_t j = read_int(true);
            if (j <= 0) throw ParseError("dilation must be positive, got " + std::to_string(j), jcol);
            if (j > std::int64_t(UINT32_MAX)) throw ParseError("dilation too large", jcol);
            std::int64_t e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = read_int(true);
            }
            factors.push_back({static_cast<std::uint32_t>(j), checked_mul(sign, e)});
        }
        expect_atom = false;
    }
    return EtaQuotient(std::move(factors));
}

std::vector<PentagonalTerm> pentagonal_terms(std::size_t N)
{
    std::vector<PentagonalTerm> out;
    out.push_back({0, 1});
    for (std::size_t t = 1;; ++t) {
        std::size_t a = t * (3 * t - 1) / 2;
        std::size_t b = t * (3 * t + 1) / 2;
        if (a >= N) break;
        int s = (t % 2 == 0) ? 1 : -1;
        out.push_back({a, s});
        if (b < N) out.push_back({b, s});
    }
    return out;
}

}  // namespace etaq
