#include "etaq/verify.hpp"

#include "etaq/eta.hpp"
#include "etaq/products.hpp"
#include "etaq/theta.hpp"

#include <stdexcept>

namespace etaq {

namespace {

const ExactInt Z{};
const GaussianInt ZI{};

ExactSeries E(std::string_view text, std::size_t N) { return eta_series(parse_eta(text), N, Z); }
ExactSeries J(std::int64_t a, std::int64_t m, std::size_t N) { return j_symbol_series(JSymbol{a, m, false}, N, Z); }
ExactSeries Jb(std::int64_t a, std::int64_t m, std::size_t N) { return j_symbol_series(JSymbol{a, m, true}, N, Z); }
ExactSeries c(long k, const ExactSeries& s) { return scale(BigInt(k), s); }
ExactSeries q(std::size_t k, const ExactSeries& s) { return shift(s, k); }
ExactSeries one(std::size_t N) { return one_series(Z, N); }
GaussSeries G(std::string_view name, std::size_t N) { return builtin_theta(name, N); }
GaussSeries gc(long re, long im, const GaussSeries& s) { return scale(ZI.from_gaussian(re, im), s); }

ExactSeries negate_q(const ExactSeries& s)
{
    ExactSeries out = s;
    for (std::size_t n = 1; n < s.trunc(); n += 2) out.raw()[n] = -s[n];
    return out;
}

ExactSeries signed_squares(std::size_t N)
{
    ExactSeries s = one(N);
    for (std::size_t n = 1; n * n < N; ++n) s.set(n * n, BigInt(n % 2 == 0 ? 2 : -2));
    return s;
}

// The triple-product factor 2(f1^3/f3 - 1) - 3q f9^3/f3 shared by the mod-9 lemmas.
ExactSeries jj_bracket(std::size_t N, long constant)
{
    return c(2, E("f1^3/f3", N) - one(N)) - c(3, q(1, E("f9^3/f3", N))) + c(constant, one(N));
}

ExactSeries with_prefix(const std::vector<PrefixTerm>& terms, std::size_t N)
{
    ExactSeries s(Z, N);
    for (const auto& t : terms)
        if (t.exponent < N) s.set(t.exponent, BigInt(t.re));
    return s;
}

GaussSeries with_prefix_gauss(const std::vector<PrefixTerm>& terms, std::size_t N)
{
    GaussSeries s(ZI, N);
    for (const auto& t : terms)
        if (t.exponent < N) s.set(t.exponent, ZI.from_gaussian(t.re, t.im));
    return s;
}

ExactSeries q5_f12_10(std::size_t N) { return shift(dilate(E("f1^10", N), 12), 5); }
ExactSeries q5_f12_5_f60(std::size_t N) { return shift(dilate(E("f1^5*f5", N), 12), 5); }

// Sample for the corrected 2 (mod 3) step of the mod-9 theorem:
// A = f1^4 f2^3 f3, so f1^3 f2^3 = A0 + 3q A1 + 3q^2 A2 and D = f3.
std::vector<ExactSeries> mod9_two_mod_three_chain(std::size_t N)
{
    const ExactSeries X = E("f1^3*f2^3", N);
    const auto d = dissect(X, 3);
    auto comp = [&](std::size_t r) {
        ExactSeries s(Z, N);
        for (std::size_t n = 0; 3 * n + r < N; ++n) {
            BigInt v = d.components[r][n];
            if (r > 0) {
                if (mpz_divisible_ui_p(v.get_mpz_t(), 3) == 0) throw std::logic_error("A1/A2 component not divisible by 3");
                v /= 3;
            }
            s.set(3 * n, v);
        }
        return s;
    };
    const ExactSeries A0 = comp(0), A1 = comp(1), A2 = comp(2);
    const ExactSeries D = E("f3", N);
    const ExactSeries A = E("f1^4*f2^3*f3", N);
    const ExactSeries B = mul(E("f3/f1^3", N), A);
    const ExactSeries lhs = residue_part(c(2, B) + A, 3, 2);

    ExactSeries a3 = dilate(borwein_a(N, Z), 3);
    ExactSeries C0(Z, N);  // 3 C0 = 2 (a(q^3) - 1), exactly
    for (std::size_t n = 1; n < N; ++n) {
        BigInt v = 2 * a3[n];
        if (mpz_divisible_ui_p(v.get_mpz_t(), 3) == 0) throw std::logic_error("a(q)-1 not divisible by 3");
        C0.set(n, v / 3);
    }
    const ExactSeries C1 = E("f9^3/f3", N);
    const ExactSeries J3 = J(3, 27, N), J6 = J(6, 27, N), J12 = J(12, 27, N);

    const ExactSeries line2 =
        c(-3, q(2, mul(D, c(2, mul(mul(A0, C0), J3)) + c(2, mul(mul(A0, C1), J6)) + mul(A0, J3) + c(3, mul(A1, J6)) -
                             c(3, mul(A2, J12)))));
    const ExactSeries line3 = c(3, q(2, mul(mul(D, A0), mul(C0 - one(N), J3) + mul(C1, J6))));
    const ExactSeries line4 =
        q(2, mul(mul(D, A0), mul(jj_bracket(N, -3), J3) + c(3, mul(E("f9^3/f3", N), J6))));
    return {lhs, line2, line3, line4, ExactSeries(Z, N)};
}

std::vector<RegistryEntry> build()
{
    std::vector<RegistryEntry> r;
    auto identity = [&](std::string id, std::string statement, std::vector<std::string> labels,
                        std::function<std::vector<ExactSeries>(std::size_t)> f) {
        RegistryEntry e;
        e.id = std::move(id);
        e.statement = std::move(statement);
        e.side_labels = std::move(labels);
        e.exact_sides = std::move(f);
        r.push_back(std::move(e));
        return &r.back();
    };
    auto gauss_identity = [&](std::string id, std::string statement, std::vector<std::string> labels,
                              std::function<std::vector<GaussSeries>(std::size_t)> f) {
        RegistryEntry e;
        e.id = std::move(id);
        e.statement = std::move(statement);
        e.side_labels = std::move(labels);
        e.gauss_sides = std::move(f);
        e.default_bound = 3000;
        r.push_back(std::move(e));
        return &r.back();
    };
    auto congruence = [&](std::string id, std::uint32_t m, std::string statement, std::vector<std::string> labels,
                          std::function<std::vector<ExactSeries>(std::size_t)> f) {
        auto* e = identity(std::move(id), std::move(statement), std::move(labels), std::move(f));
        e->kind = EntryKind::Congruence;
        e->modulus = m;
        return e;
    };

    // 2-dissections and theta specialisations
    identity("f1-2dissect-a", "f1 = (f2/f4)(Jbar6,16 - q Jbar2,16)", {"f1", "rhs"}, [](std::size_t N) {
        return std::vector{E("f1", N), mul(E("f2/f4", N), Jb(6, 16, N) - q(1, Jb(2, 16, N)))};
    });
    identity("f1-2dissect-b", "1/f1 = (1/f2^2)(Jbar6,16 + q Jbar2,16)", {"1/f1", "rhs"}, [](std::size_t N) {
        return std::vector{E("1/f1", N), mul(E("1/f2^2", N), Jb(6, 16, N) + q(1, Jb(2, 16, N)))};
    });
    identity("neg-q-product", "(-q;-q)_inf = f2^3/(f1 f4)", {"f2^3/(f1 f4)", "f1(-q)"}, [](std::size_t N) {
        return std::vector{E("f2^3/f1/f4", N), negate_q(E("f1", N))};
    });
    identity("f12f2-theta", "f1^2/f2 = 1 + 2 sum (-1)^n q^{n^2}", {"f1^2/f2", "theta"}, [](std::size_t N) {
        return std::vector{E("f1^2/f2", N), signed_squares(N)};
    });
    identity("f12f2-2dissect", "f1^2/f2 = f8^5/(f4^2 f16^2) - 2q f16^2/f8", {"f1^2/f2", "rhs"}, [](std::size_t N) {
        return std::vector{E("f1^2/f2", N), E("f8^5/f4^2/f16^2", N) - c(2, q(1, E("f16^2/f8", N)))};
    });
    identity("f1-Jbar12", "f1 = Jbar5,12 - q Jbar1,12", {"f1", "rhs"}, [](std::size_t N) {
        return std::vector{E("f1", N), Jb(5, 12, N) - q(1, Jb(1, 12, N))};
    });
    identity("f1-3dissect", "f1 = J12,27 - q J6,27 - q^2 J3,27", {"f1", "rhs"}, [](std::size_t N) {
        return std::vector{E("f1", N), J(12, 27, N) - q(1, J(6, 27, N)) - q(2, J(3, 27, N))};
    });
    identity("borwein-a-q3", "a(q^3) = f1^3/f3 + 3q f9^3/f3", {"a(q^3)", "rhs"}, [](std::size_t N) {
        return std::vector{dilate(borwein_a(N, Z), 3), E("f1^3/f3", N) + c(3, q(1, E("f9^3/f3", N)))};
    });
    identity("f3-over-f1cubed", "f3/f1^3 = (f9^3/f3^9)(a(q^3)^2 + 3q a(q^3) f9^3/f3 + 9q^2 f9^6/f3^2)",
             {"f3/f1^3", "rhs"}, [](std::size_t N) {
                 const ExactSeries a3 = dilate(borwein_a(N, Z), 3);
                 const ExactSeries w = E("f9^3/f3", N);
                 const ExactSeries inner = mul(a3, a3) + c(3, q(1, mul(a3, w))) + c(9, q(2, mul(w, w)));
                 return std::vector{E("f3/f1^3", N), mul(E("f9^3/f3^9", N), inner)};
             });
    identity("f1sq-f2cubed-split", "f1^2 f2^3 = f8^15/(f4^4 f16^6) - 2q f8^9/(f4^2 f16^2) - 4q^2 f8^3 f16^2 + 8q^3 f4^2 f16^6/f8^3",
             {"f1^2 f2^3", "rhs"}, [](std::size_t N) {
                 return std::vector{E("f1^2*f2^3", N), E("f8^15/f4^4/f16^6", N) - c(2, q(1, E("f8^9/f4^2/f16^2", N))) -
                                                           c(4, q(2, E("f8^3*f16^2", N))) +
                                                           c(8, q(3, E("f4^2*f16^6/f8^3", N)))};
             });
    auto* l5c = identity("f1pow6-f4sq-over-f2cubed-split", "f1^6 f4^2/f2^3 = f8^15/(f4^4 f16^6) - 6q f8^9/(f4^2 f16^2) + 12q^2 f8^3 f16^2 - 8q^3 f4^2 f16^6/f8^3",
             {"f1^6 f4^2/f2^3", "rhs"}, [](std::size_t N) {
                 return std::vector{E("f1^6*f4^2/f2^3", N), E("f8^15/f4^4/f16^6", N) -
                                                                c(6, q(1, E("f8^9/f4^2/f16^2", N))) +
                                                                c(12, q(2, E("f8^3*f16^2", N))) -
                                                                c(8, q(3, E("f4^2*f16^6/f8^3", N)))};
             });
    l5c->note = "the last term carries f4^2; without it the sides differ at q^7";

    // CM decompositions, denominators cleared
    gauss_identity("f110-S1S2-combination", "96 q^5 f12^10 = S2 - S1", {"96 q^5 f12^10", "S2 - S1"},
                   [](std::size_t N) {
                       return std::vector{to_gaussian(c(96, q5_f12_10(N))), G("S2", N) - G("S1", N)};
                   });
    gauss_identity("f110-H7H8", "48 q^5 f12^10 = i (H8 - H7)", {"48 q^5 f12^10", "i(H8 - H7)"}, [](std::size_t N) {
        return std::vector{to_gaussian(c(48, q5_f12_10(N))), gc(0, 1, G("H8", N) - G("H7", N))};
    });
    gauss_identity("f110-S1S2-Hj", "S1 = H3 - H4 + iH7 - iH8 and S2 = H3 - H4 - iH7 + iH8 agree at 1 (mod 12), negate at 5",
                   {"S2", "S1 on 1 mod 12 minus S1 on 5 mod 12"}, [](std::size_t N) {
                       const GaussSeries s1 = G("S1", N);
                       return std::vector{G("S2", N), residue_part(s1, 12, 1) - residue_part(s1, 12, 5)};
                   });
    gauss_identity("f15f5-S3S4-combination",
                   "96 q^5 f12^5 f60 = (-3+4i) S3 + (-3-4i) S3bar + (3-4i) S4 + (3+4i) S4bar",
                   {"96 q^5 f12^5 f60", "rhs"}, [](std::size_t N) {
                       return std::vector{to_gaussian(c(96, q5_f12_5_f60(N))),
                                          gc(-3, 4, G("S3", N)) + gc(-3, -4, G("S3bar", N)) + gc(3, -4, G("S4", N)) +
                                              gc(3, 4, G("S4bar", N))};
                   });
    gauss_identity("S3bar-conjugate", "sum beta_j H_j = conj(sum alpha_j H_j)", {"S3bar", "conj S3"},
                   [](std::size_t N) { return std::vector{G("S3bar", N), conjugate(G("S3", N))}; });
    gauss_identity("S4bar-conjugate", "sum delta_j H_j = conj(sum gamma_j H_j)", {"S4bar", "conj S4"},
                   [](std::size_t N) { return std::vector{G("S4bar", N), conjugate(G("S4", N))}; });
    gauss_identity("qf4-6-theta", "2 q f4^6 = sum (2m+1+2ni)^2 q^{norm}", {"2 q f4^6", "theta"}, [](std::size_t N) {
        return std::vector{to_gaussian(c(2, q(1, E("f4^6", N)))), G("Theta6", N)};
    });

    // Published prefixes through q^197.
    for (const auto& [name, family] : std::vector<std::pair<std::string, std::string>>{
             {"S1", "S1"}, {"S2", "S2"}, {"S3", "S3"}, {"S4", "S4"}}) {
        const std::string nm = name;
        auto* e = gauss_identity("prefix-" + name, name + " matches the published prefix", {name, "published"},
                                 [nm](std::size_t N) {
                                     return std::vector{G(nm, N), with_prefix_gauss(reference_prefix(nm).terms, N)};
                                 });
        e->fixed_bound = 198;
    }
    {
        auto* e = identity("prefix-q5f12_10", "q^5 f12^10 matches the published prefix", {"q^5 f12^10", "published"},
                           [](std::size_t N) {
                               return std::vector{q5_f12_10(N), with_prefix(reference_prefix("q5*f12^10").terms, N)};
                           });
        e->fixed_bound = 198;
        e = identity("prefix-q5f12_5f60", "q^5 f12^5 f60 matches the published prefix", {"q^5 f12^5 f60", "published"},
                     [](std::size_t N) {
                         return std::vector{q5_f12_5_f60(N), with_prefix(reference_prefix("q5*f12^5*f60").terms, N)};
                     });
        e->fixed_bound = 198;
    }

    // Congruences
    congruence("Jbar16-mod4-a", 4,
               "-2q^2 f16^2 Jbar2,16/f8 - f2^2 Jbar6,16/f4 + 2 Jbar6,16 - f8^5 Jbar6,16/(f4^2 f16^2) = 0 (mod 4)",
               {"lhs", "0"}, [](std::size_t N) {
                   const ExactSeries j2 = Jb(2, 16, N), j6 = Jb(6, 16, N);
                   return std::vector{c(-2, q(2, mul(E("f16^2/f8", N), j2))) - mul(E("f2^2/f4", N), j6) + c(2, j6) -
                                          mul(E("f8^5/f4^2/f16^2", N), j6),
                                      ExactSeries(Z, N)};
               });
    congruence("Jbar16-mod4-b", 4, "f2^2 Jbar2,16/f4 + f8^5 Jbar2,16/(f4^2 f16^2) + 2 f16^2 Jbar6,16/f8 = 0 (mod 4)",
               {"lhs", "0"}, [](std::size_t N) {
                   const ExactSeries j2 = Jb(2, 16, N), j6 = Jb(6, 16, N);
                   return std::vector{mul(E("f2^2/f4", N), j2) + mul(E("f8^5/f4^2/f16^2", N), j2) +
                                          c(2, mul(E("f16^2/f8", N), j6)),
                                      ExactSeries(Z, N)};
               });
    congruence("f1-Jbar12-mod4", 4, "f1 (f1^2/f2 + f3^2/f6) - 2 Jbar5,12 = 0 (mod 4)", {"lhs", "0"},
               [](std::size_t N) {
                   return std::vector{mul(E("f1", N), E("f1^2/f2", N) + E("f3^2/f6", N)) - c(2, Jb(5, 12, N)),
                                      ExactSeries(Z, N)};
               });
    {
        auto* e = congruence("J27-mod9-a", 9, "[2(f1^3/f3 - 1) - 3q f9^3/f3] J12,27 - 3q^3 (f9^3/f3) J3,27 = 0 (mod 9)",
                             {"lhs", "0"}, [](std::size_t N) {
                                 return std::vector{mul(jj_bracket(N, 0), J(12, 27, N)) -
                                                        c(3, q(3, mul(E("f9^3/f3", N), J(3, 27, N)))),
                                                    ExactSeries(Z, N)};
                             });
        e->sturm_bound = 243;
        e = congruence("J27-mod9-b", 9, "[2(f1^3/f3 - 1) - 3q f9^3/f3 + 3] J6,27 - 3 (f9^3/f3) J12,27 = 0 (mod 9)",
                       {"lhs", "0"}, [](std::size_t N) {
                           return std::vector{mul(jj_bracket(N, 3), J(6, 27, N)) -
                                                  c(3, mul(E("f9^3/f3", N), J(12, 27, N))),
                                              ExactSeries(Z, N)};
                       });
        e->sturm_bound = 243;
        e = congruence("J27-mod9-c", 9, "[2(f1^3/f3 - 1) - 3q f9^3/f3 - 3] J3,27 + 3 (f9^3/f3) J6,27 = 0 (mod 9)",
                       {"lhs", "0"}, [](std::size_t N) {
                           return std::vector{mul(jj_bracket(N, -3), J(3, 27, N)) +
                                                  c(3, mul(E("f9^3/f3", N), J(6, 27, N))),
                                              ExactSeries(Z, N)};
                       });
        e->sturm_bound = 243;
    }
    congruence("f3-over-f1cubed-mod9", 9,
               "f3/f1^3 = a(q^3)^2 + 3q a(q^3) f9^3/f3 = 2a(q^3) - 1 + 3q f9^3/f3 = 2 f1^3/f3 - 1 (mod 9)",
               {"f3/f1^3", "a^2 + 3q a w", "2a - 1 + 3q w", "2 f1^3/f3 - 1"}, [](std::size_t N) {
                   const ExactSeries a3 = dilate(borwein_a(N, Z), 3);
                   const ExactSeries w = E("f9^3/f3", N);
                   return std::vector{E("f3/f1^3", N), mul(a3, a3) + c(3, q(1, mul(a3, w))),
                                      c(2, a3) - one(N) + c(3, q(1, w)), c(2, E("f1^3/f3", N)) - one(N)};
               });
    congruence("borwein-a-mod3", 3, "a(q) - 1 = 0 (mod 3)", {"a(q) - 1", "0"}, [](std::size_t N) {
        return std::vector{borwein_a(N, Z) - one(N), ExactSeries(Z, N)};
    });
    congruence("borwein-a-square-mod9", 9, "a(q)^2 = 2a(q) - 1 (mod 9)", {"a^2", "2a - 1"}, [](std::size_t N) {
        const ExactSeries a = borwein_a(N, Z);
        return std::vector{mul(a, a), c(2, a) - one(N)};
    });
    {
        auto* e = congruence(
            "mod9-2mod3-step", 9,
            "sum (2b+a)_{3n+2} q^{3n+2} = -3Dq^2(...) = 3 D A0 q^2 [(C0-1) J3,27 + C1 J6,27] = D A0 q^2 [JJ3 bracket] = 0 (mod 9)",
            {"2b + a on 2 mod 3", "expanded", "grouped", "with JJ3 bracket", "0"}, mod9_two_mod_three_chain);
        e->note = "sample A = f1^4 f2^3 f3; the JJ3 line keeps the factor A0";
    }
    congruence("f125-over-f55-trivial", 25, "f1^25/f5^5 = 1 (mod 25)", {"f1^25/f5^5", "1"}, [](std::size_t N) {
        return std::vector{E("f1^25/f5^5", N), one(N)};
    });
    congruence("f125-over-f55-times-A", 25, "A f1^25/f5^5 = A (mod 25) for A = f1 f5", {"B", "A"},
               [](std::size_t N) {
                   return std::vector{E("f1^26/f5^4", N), E("f1*f5", N)};
               });
    {
        auto* e = identity("f110-S1-residue5", "48 q^5 f12^10 = -(S1 restricted to exponents 5 mod 12)",
                           {"48 q^5 f12^10", "-S1 on 5 mod 12"}, [](std::size_t N) {
                               return std::vector{c(48, q5_f12_10(N)),
                                                  -residue_part(real_part(G("S1", N)), 12, 5)};
                           });
        e->default_bound = 3000;
        e = congruence("f110-S1-residue5-mod25", 25, "48 q^5 f12^10 = -(S1 on 5 mod 12) (mod 25)",
                       {"48 q^5 f12^10", "-S1 on 5 mod 12"}, [](std::size_t N) {
                           return std::vector{c(48, q5_f12_10(N)),
                                              -residue_part(real_part(G("S1", N)), 12, 5)};
                       });
        e->default_bound = 3000;
    }
    return r;
}

template <CoefficientRing R>
VerifyReport compare_sides(const RegistryEntry& e, std::vector<TruncatedSeries<R>> sides, std::size_t N,
                           std::optional<std::size_t> perturb)
{
    VerifyReport rep;
    rep.id = e.id;
    rep.bound = N;
    rep.modulus = e.modulus;
    if (sides.size() < 2) throw std::logic_error("registry entry " + e.id + " has fewer than two sides");
    if (perturb && *perturb < N) {
        auto& last = sides.back();
        auto v = last[*perturb];
        last.ring().add_to(v, last.ring().one());
        last.set(*perturb, v);
    }
    auto label = [&](std::size_t i) { return i < e.side_labels.size() ? e.side_labels[i] : "side " + std::to_string(i); };
    auto fail = [&](std::size_t i, std::size_t n, std::string l, std::string rr) {
        rep.status = VerifyStatus::Fail;
        rep.mismatch = Mismatch{n, std::move(l), std::move(rr), label(0) + " vs " + label(i)};
    };
    for (std::size_t i = 1; i < sides.size(); ++i) {
        if constexpr (R::kind == RingKind::GaussianInt) {
            if (e.modulus) {
                auto a = reduce_mod(sides[0], *e.modulus), b = reduce_mod(sides[i], *e.modulus);
                if (auto n = first_mismatch(a, b)) {
                    fail(i, *n, a.ring().to_string(a[*n]), b.ring().to_string(b[*n]));
                    return rep;
                }
                continue;
            }
        } else {
            if (e.modulus) {
                auto a = reduce_mod(sides[0], *e.modulus), b = reduce_mod(sides[i], *e.modulus);
                if (auto n = first_mismatch(a, b)) {
                    fail(i, *n, std::to_string(a[*n]), std::to_string(b[*n]));
                    return rep;
                }
                continue;
            }
        }
        if (auto n = first_mismatch(sides[0], sides[i])) {
            fail(i, *n, sides[0].ring().to_string(sides[0][*n]), sides[i].ring().to_string(sides[i][*n]));
            return rep;
        }
    }
    return rep;
}

}  // namespace

std::string to_string(VerifyStatus s)
{
    switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::HypothesisViolation: return "hypothesis_violation";
    }
    return "unknown";
}

const std::vector<RegistryEntry>& registry()
{
    static const std::vector<RegistryEntry> entries = build();
    return entries;
}

const RegistryEntry& registry_entry(std::string_view id)
{
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown registry id: " + std::string(id));
}

VerifyReport verify_entry(const RegistryEntry& e, std::size_t N, std::optional<std::size_t> perturb)
{
    if (N == 0) throw std::invalid_argument("verification bound must be positive");
    const std::size_t bound = e.fixed_bound ? std::min(N, *e.fixed_bound) : N;
    VerifyReport rep = e.exact_sides ? compare_sides(e, e.exact_sides(bound), bound, perturb)
                                     : compare_sides(e, e.gauss_sides(bound), bound, perturb);
    rep.detail = e.statement;
    if (!e.note.empty()) rep.detail += "; " + e.note;
    if (e.sturm_bound) rep.detail += "; Sturm bound " + std::to_string(*e.sturm_bound);
    return rep;
}

VerifyReport verify_identity(std::string_view id, std::size_t N)
{
    const auto& e = registry_entry(id);
    if (e.kind != EntryKind::Identity) throw std::invalid_argument(std::string(id) + " is a congruence, not an identity");
    return verify_entry(e, N);
}

VerifyReport verify_congruence(std::string_view id, std::size_t N)
{
    const auto& e = registry_entry(id);
    if (e.kind != EntryKind::Congruence) throw std::invalid_argument(std::string(id) + " is an identity, not a congruence");
    return verify_entry(e, N);
}

}  // namespace etaq
