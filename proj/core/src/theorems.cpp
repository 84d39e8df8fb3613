#include "etaq/verify.hpp"

#include "etaq/combinatorics.hpp"

#include <set>
#include <stdexcept>

namespace etaq {

namespace {

int mod(std::int64_t v, int m) { return static_cast<int>(((v % m) + m) % m); }

VerifyReport hypothesis_violation(std::string id, std::size_t N, std::uint32_t m, std::string why)
{
    VerifyReport r;
    r.id = std::move(id);
    r.bound = N;
    r.modulus = m;
    r.status = VerifyStatus::HypothesisViolation;
    r.detail = std::move(why);
    return r;
}

void fail(VerifyReport& r, std::size_t n, std::uint32_t a, std::uint32_t b, std::string condition)
{
    r.status = VerifyStatus::Fail;
    r.mismatch = Mismatch{n, std::to_string(a), std::to_string(b), std::move(condition)};
}

}  // namespace

std::optional<std::string> mod4_main_violation(const EtaQuotient& A)
{
    const auto n1 = A.exponent_of(1);
    if (mod(n1, 2) == 0) return "exponent of f1 is " + std::to_string(n1) + ", must be odd";
    for (const auto& f : A.factors())
        if (f.dilation > 1 && f.dilation % 2 == 1 && mod(f.exponent, 2) == 1)
            return "exponent of f" + std::to_string(f.dilation) + " is " + std::to_string(f.exponent) +
                   ", must be even for odd j > 1";
    return std::nullopt;
}

std::optional<std::string> mod9_violation(const EtaQuotient& A)
{
    const auto n1 = A.exponent_of(1);
    if (mod(n1, 3) != 1) return "exponent of f1 is " + std::to_string(n1) + ", must be 1 mod 3";
    for (const auto& f : A.factors())
        if (f.dilation > 1 && f.dilation % 3 != 0 && mod(f.exponent, 3) != 0)
            return "exponent of f" + std::to_string(f.dilation) + " is " + std::to_string(f.exponent) +
                   ", must be 0 mod 3 when 3 does not divide j";
    return std::nullopt;
}

EtaQuotient mod4_second_quotient(const std::vector<SecondFamilyTerm>& S)
{
    EtaQuotient A = EtaQuotient::f(1);
    for (const auto& [j, n] : S) {
        if (j == 0) throw std::invalid_argument("second-family set needs positive j");
        const auto unit = EtaQuotient::f(j, 2) / EtaQuotient::f(2 * j);
        A = A * unit.pow(n);
    }
    return A;
}

VerifyReport check_mod4_main(const EtaQuotient& A, std::size_t N)
{
    const std::string id = "mod4-main " + A.to_string();
    if (auto why = mod4_main_violation(A)) return hypothesis_violation(id, N, 4, *why);
    if (N == 0) throw std::invalid_argument("bound must be positive");
    const ModInt R(4);
    const auto a = eta_series(A, N, R);
    const auto b = eta_series(A * parse_eta("f1^2*f2/f4"), N, R);
    // f1^2 f2/f4 = f1^2/f2 + f2^2/f4 - 1 (mod 4)
    const auto alt = mul(a, eta_series(parse_eta("f1^2/f2"), N, R) + eta_series(parse_eta("f2^2/f4"), N, R) -
                                one_series(R, N));
    VerifyReport r;
    r.id = id;
    r.bound = N;
    r.modulus = 4;
    r.detail = "B = A f1^2 f2/f4";
    for (std::size_t n = 0; n < N; ++n) {
        const auto an = a[n], bn = b[n];
        if (n % 2 == 0 ? R.sub(an, bn) != 0 : R.add(an, bn) != 0) {
            fail(r, n, an, bn, n % 2 == 0 ? "a_{2n} = b_{2n}" : "a_{2n+1} = -b_{2n+1}");
            return r;
        }
        if ((an == 0) != (bn == 0)) {
            fail(r, n, an, bn, "a_n = 0 iff b_n = 0");
            return r;
        }
        if ((an == 2) != (bn == 2)) {
            fail(r, n, an, bn, "a_n = 2 iff b_n = 2");
            return r;
        }
        if (alt[n] != bn) {
            fail(r, n, alt[n], bn, "A (f1^2/f2 + f2^2/f4 - 1) = B");
            return r;
        }
    }
    return r;
}

VerifyReport check_mod4_second(const std::vector<SecondFamilyTerm>& S, std::size_t N)
{
    std::string id = "mod4-second {";
    for (std::size_t i = 0; i < S.size(); ++i)
        id += (i ? "," : "") + std::string("(") + std::to_string(S[i].j) + "," + std::to_string(S[i].n) + ")";
    id += "}";
    std::set<std::uint32_t> seen;
    for (const auto& t : S) {
        if (t.j == 0) return hypothesis_violation(id, N, 4, "j must be a positive integer");
        if (!seen.insert(t.j).second) return hypothesis_violation(id, N, 4, "j = " + std::to_string(t.j) + " repeated");
    }
    if (N == 0) throw std::invalid_argument("bound must be positive");
    const ModInt R(4);
    const EtaQuotient A = mod4_second_quotient(S);
    const auto a = eta_series(A, N, R);
    const auto b = eta_series(A * parse_eta("f1^2*f3^2/f2/f6"), N, R);
    VerifyReport r;
    r.id = id;
    r.bound = N;
    r.modulus = 4;
    r.detail = "A = " + A.to_string() + ", B = A f1^2 f3^2/(f2 f6)";
    for (std::size_t n = 0; n < N; ++n) {
        const auto t = gen_pentagonal_index(n);
        const bool odd_pent = t && mod(*t, 2) == 1;
        if (a[n] % 2 == 1 && !t) {
            fail(r, n, a[n], b[n], "a_n odd only at pentagonal n");
            return r;
        }
        const std::uint32_t expect = odd_pent ? R.add(a[n], 2) : a[n];
        if (b[n] != expect) {
            fail(r, n, a[n], b[n], odd_pent ? "b_n = a_n + 2 at t odd" : "b_n = a_n");
            return r;
        }
    }
    return r;
}

VerifyReport check_mod9(const EtaQuotient& A, std::size_t N)
{
    const std::string id = "mod9 " + A.to_string();
    if (auto why = mod9_violation(A)) return hypothesis_violation(id, N, 9, *why);
    if (N == 0) throw std::invalid_argument("bound must be positive");
    const ModInt R(9);
    const auto a = eta_series(A, N, R);
    const auto b = eta_series(A * parse_eta("f3/f1^3"), N, R);
    VerifyReport r;
    r.id = id;
    r.bound = N;
    r.modulus = 9;
    r.detail = "B = A f3/f1^3";
    for (std::size_t n = 0; n < N; ++n) {
        const auto an = a[n], bn = b[n];
        std::uint32_t v = 0;
        const char* cond = "";
        switch (n % 3) {
        case 0: v = R.sub(an, bn); cond = "a_{3n} = b_{3n}"; break;
        case 1: v = R.add(R.add(an, an), bn); cond = "2a_{3n+1} + b_{3n+1} = 0"; break;
        default: v = R.add(an, R.add(bn, bn)); cond = "a_{3n+2} + 2b_{3n+2} = 0"; break;
        }
        if (v != 0) {
            fail(r, n, an, bn, cond);
            return r;
        }
        if ((an == 0) != (bn == 0)) {
            fail(r, n, an, bn, "a_n = 0 iff b_n = 0");
            return r;
        }
    }
    return r;
}

}  // namespace etaq
