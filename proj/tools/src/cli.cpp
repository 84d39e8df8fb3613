#include "etaq/cli.hpp"

#include "etaq/combinatorics.hpp"
#include "etaq/eta.hpp"
#include "etaq/oracles.hpp"
#include "etaq/search.hpp"
#include "etaq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace etaq::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kDefaultBound = 1000;
constexpr std::size_t kDeepBound = 3000;
constexpr std::size_t kTableBound = 15000;

struct BoundFlags {
    std::size_t N = 0;  // 0: command default
    bool deep = false;
    bool table_scale = false;

    void attach(CLI::App* app)
    {
        app->add_option("-N,--bound", N, "truncation bound")->check(CLI::PositiveNumber);
        app->add_flag("--deep", deep, "use N = 3000");
        app->add_flag("--table-scale", table_scale, "use N = 15000");
    }
    std::size_t resolve(std::size_t fallback) const
    {
        if (N) return N;
        if (table_scale) return kTableBound;
        if (deep) return kDeepBound;
        return fallback;
    }
    bool explicit_bound() const { return N || deep || table_scale; }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_report(std::ostream& out, const VerifyReport& r)
{
    out << (r.passed() ? "PASS " : r.status == VerifyStatus::Fail ? "FAIL " : "HYPOTHESIS ") << r.id << " N=" << r.bound;
    if (r.modulus) out << " mod " << *r.modulus;
    if (r.mismatch)
        out << " first mismatch at q^" << r.mismatch->exponent << ": " << r.mismatch->lhs << " vs " << r.mismatch->rhs
            << " [" << r.mismatch->condition << "]";
    if (r.status == VerifyStatus::HypothesisViolation) out << ": " << r.detail;
    out << '\n';
}

int exit_for(const std::vector<VerifyReport>& rs)
{
    int code = kPass;
    for (const auto& r : rs) {
        if (r.status == VerifyStatus::HypothesisViolation) return kUsage;
        if (r.status == VerifyStatus::Fail) code = kFail;
    }
    return code;
}

int emit_reports(std::ostream& out, const std::vector<VerifyReport>& rs, const std::string& format)
{
    if (format == "json") {
        out << to_json(rs) << '\n';
    } else {
        std::size_t pass = 0;
        for (const auto& r : rs) {
            print_report(out, r);
            pass += r.passed();
        }
        if (rs.size() > 1) out << pass << "/" << rs.size() << " passed\n";
    }
    return exit_for(rs);
}

template <CoefficientRing R>
void print_coeffs(std::ostream& out, const TruncatedSeries<R>& s)
{
    for (std::size_t n = 0; n < s.trunc(); ++n) out << (n ? " " : "") << s.ring().to_string(s[n]);
    out << '\n';
}

template <CoefficientRing R>
ordered_json coeffs_json(const TruncatedSeries<R>& s)
{
    auto a = ordered_json::array();
    for (std::size_t n = 0; n < s.trunc(); ++n) a.push_back(s.ring().to_string(s[n]));
    return a;
}

std::vector<SecondFamilyTerm> parse_second_family(const std::string& text)
{
    // "j:n,j:n" or "{}" / "" for the empty set
    std::vector<SecondFamilyTerm> S;
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '{' && c != '}' && c != '(' && c != ')') t += c;
    if (t.empty()) return S;
    std::stringstream ss(t);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("expected j:n in set, got '" + item + "'");
        try {
            const long j = std::stol(item.substr(0, colon));
            const long n = std::stol(item.substr(colon + 1));
            if (j <= 0) throw UsageError("j must be positive in '" + item + "'");
            S.push_back({static_cast<std::uint32_t>(j), n});
        } catch (const std::logic_error&) {
            throw UsageError("malformed set element '" + item + "'");
        }
    }
    return S;
}

std::string verdict_tag(const VanishingVerdict& v) { return to_string(v.trigger); }

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"q-series expansion, dissection and congruence verification"};
    app.require_subcommand(1);
    std::string format = "text";

    // expand
    auto* expand = app.add_subcommand("expand", "coefficients of an eta quotient");
    std::string eta_text;
    std::uint32_t modulus = 0;
    BoundFlags expand_bound;
    expand->add_option("eta", eta_text, "eta quotient, e.g. f1^2*f4/f2")->required();
    expand->add_option("--mod", modulus, "reduce modulo m")->check(CLI::Range(2u, 1u << 31));
    expand_bound.attach(expand);
    expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // dissect
    auto* dissect_cmd = app.add_subcommand("dissect", "m-dissection of an eta quotient");
    std::size_t parts = 0;
    BoundFlags dissect_bound;
    dissect_cmd->add_option("eta", eta_text)->required();
    dissect_cmd->add_option("-m,--parts", parts, "dissection modulus")->required()->check(CLI::PositiveNumber);
    dissect_cmd->add_option("--mod", modulus)->check(CLI::Range(2u, 1u << 31));
    dissect_bound.attach(dissect_cmd);
    dissect_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // verify
    std::string id_list;
    for (const auto& e : registry()) id_list += "\n  " + e.id;
    auto* verify = app.add_subcommand("verify", "check registered identities and congruences; ids:" + id_list);
    std::string id;
    BoundFlags verify_bound;
    std::optional<std::size_t> perturb;
    verify->add_option("id", id, "registry id or 'all'")->required();
    verify_bound.attach(verify);
    verify->add_option("--perturb", perturb, "add q^k to the last side");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // theorem
    auto* theorem = app.add_subcommand("theorem", "infinite-family congruence checks");
    std::string family, a_text, s_text;
    BoundFlags theorem_bound;
    theorem->add_option("family", family)->required()->check(CLI::IsMember({"mod4", "mod4b", "mod9"}));
    theorem->add_option("--A", a_text, "eta quotient A (mod4, mod9)");
    theorem->add_option("--S", s_text, "set of j:n pairs (mod4b), e.g. 2:3,7:-2");
    theorem_bound.attach(theorem);
    theorem->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // scan
    auto* scan = app.add_subcommand("scan", "quintuple scans of candidate eta quotients");
    std::string table, candidates_path, out_path, sidecar_path;
    std::uint32_t scan_mod = 25;
    unsigned jobs = 1;
    std::size_t scan_mod_bound = 0;
    BoundFlags scan_bound;
    scan->add_option("--table", table)->required()->check(CLI::IsMember({"t1", "t2"}));
    scan->add_option("--candidates", candidates_path)->required();
    scan->add_option("--mod", scan_mod)->check(CLI::Range(2u, 1u << 31));
    scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    scan->add_option("--mod-bound", scan_mod_bound, "terms counted for the mod-m columns (default N + 10)")
        ->check(CLI::PositiveNumber);
    scan->add_option("-o,--out", out_path, "CSV output path (default stdout)");
    scan->add_option("--sidecar", sidecar_path, "JSON digest output path");
    scan_bound.attach(scan);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "single-n verdict with its triggering condition");
    std::string oracle_name;
    std::uint64_t oracle_n = 0;
    oracle->add_option("name", oracle_name)->required()->check(CLI::IsMember({"f1_10", "f1_5_f5", "f1f5", "f1_6"}));
    oracle->add_option("--n", oracle_n)->required();
    oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // oracle-equiv
    auto* equiv = app.add_subcommand("oracle-equiv", "oracle against direct expansion for all n < N");
    BoundFlags equiv_bound;
    std::vector<std::string> equiv_names = oracle_names();
    equiv_names.push_back("all");
    equiv->add_option("name", oracle_name)->required()->check(CLI::IsMember(equiv_names));
    equiv_bound.attach(equiv);
    equiv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // corollaries
    auto* cor = app.add_subcommand("corollaries", "partition-theoretic corollary checks");
    std::uint64_t nmax = 3000;
    cor->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    cor->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*expand) {
            const EtaQuotient A = parse_eta(eta_text);
            const std::size_t N = expand_bound.resolve(kDefaultBound);
            if (modulus) {
                const auto s = eta_series(A, N, ModInt(modulus));
                if (format == "json") out << ordered_json{{"eta", A.to_string()}, {"N", N}, {"mod", modulus}, {"coefficients", coeffs_json(s)}}.dump() << '\n';
                else print_coeffs(out, s);
            } else {
                const auto s = eta_series(A, N, ExactInt{});
                if (format == "json") out << ordered_json{{"eta", A.to_string()}, {"N", N}, {"coefficients", coeffs_json(s)}}.dump() << '\n';
                else print_coeffs(out, s);
            }
            return kPass;
        }
        if (*dissect_cmd) {
            const EtaQuotient A = parse_eta(eta_text);
            const std::size_t N = dissect_bound.resolve(kDefaultBound);
            auto emit = [&](const auto& d) {
                if (format == "json") {
                    ordered_json j{{"eta", A.to_string()}, {"N", N}, {"m", parts}};
                    for (const auto& c : d.components) j["components"].push_back(coeffs_json(c));
                    out << j.dump() << '\n';
                } else {
                    for (std::size_t r = 0; r < d.components.size(); ++r) {
                        out << "r=" << r << ": ";
                        print_coeffs(out, d.components[r]);
                    }
                }
            };
            if (modulus) emit(etaq::dissect(eta_series(A, N, ModInt(modulus)), parts));
            else emit(etaq::dissect(eta_series(A, N, ExactInt{}), parts));
            return kPass;
        }
        if (*verify) {
            std::vector<VerifyReport> rs;
            auto one = [&](const RegistryEntry& e) {
                rs.push_back(verify_entry(e, verify_bound.resolve(e.default_bound), perturb));
            };
            if (id == "all") {
                for (const auto& e : registry()) one(e);
            } else {
                try {
                    one(registry_entry(id));
                } catch (const std::invalid_argument& e) {
                    err << "error: " << e.what() << '\n';
                    return kUsage;
                }
            }
            return emit_reports(out, rs, format);
        }
        if (*theorem) {
            const std::size_t N = theorem_bound.resolve(kDefaultBound);
            VerifyReport r;
            if (family == "mod4b") {
                if (!a_text.empty()) throw UsageError("mod4b takes --S, not --A");
                r = check_mod4_second(parse_second_family(s_text), N);
            } else {
                if (a_text.empty()) throw UsageError(family + " needs --A <eta>");
                const EtaQuotient A = parse_eta(a_text);
                r = family == "mod4" ? check_mod4_main(A, N) : check_mod9(A, N);
            }
            return emit_reports(out, {r}, format);
        }
        if (*scan) {
            std::ifstream in(candidates_path);
            if (!in) {
                err << "error: cannot read candidate file " << candidates_path << '\n';
                return kUsage;
            }
            const auto cands = read_candidates(in);
            TableOptions opt;
            opt.bound = scan_bound.resolve(kDefaultBound);
            opt.mod_bound = scan_mod_bound ? scan_mod_bound : opt.bound + kTableModExtra;
            opt.modulus = scan_mod;
            opt.extra_columns = table == "t2";
            opt.jobs = jobs;
            const auto result = reproduce_table(cands, opt);
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) {
                    err << "error: cannot write " << out_path << '\n';
                    return kUsage;
                }
            }
            write_csv(out_path.empty() ? out : file, result);
            if (!sidecar_path.empty()) {
                std::ofstream side(sidecar_path);
                if (!side) {
                    err << "error: cannot write " << sidecar_path << '\n';
                    return kUsage;
                }
                side << sidecar_json(result) << '\n';
            }
            for (const auto& e : result.errors)
                err << "candidate " << e.index << " '" << e.text << "': " << e.message << '\n';
            return result.errors.empty() ? kPass : kUsage;
        }
        if (*oracle) {
            ordered_json j{{"oracle", oracle_name}, {"n", oracle_n}};
            std::ostringstream text;
            text << oracle_name << " n=" << oracle_n;
            auto verdict = [&](const std::string& coeff, const VanishingVerdict& v) {
                j["coefficient"] = coeff;
                j["vanishes_mod_25"] = v.vanishes;
                j["trigger"] = verdict_tag(v);
                if (v.prime) j["prime"] = v.prime;
                if (v.second_prime) j["second_prime"] = v.second_prime;
                text << " coefficient=" << coeff << " vanishes mod 25: " << (v.vanishes ? "yes" : "no")
                     << " trigger=" << verdict_tag(v);
                if (v.prime) text << " p=" << v.prime;
                if (v.second_prime) text << " q=" << v.second_prime;
            };
            if (oracle_name == "f1_10") verdict(coeff_f1_10(oracle_n).get_str(), vanish25_f1_10(oracle_n));
            else if (oracle_name == "f1_5_f5") verdict(coeff_f1_5_f5(oracle_n).get_str(), vanish25_f1_5_f5(oracle_n));
            else if (oracle_name == "f1f5") verdict(A_coeff(oracle_n).get_str(), vanish25_A(oracle_n));
            else {
                const bool flag = necessary25_B(oracle_n);
                const auto s = eta_series(parse_eta("f1^6"), oracle_n + 1, ExactInt{});
                const BigInt c = s[oracle_n];
                j["coefficient"] = c.get_str();
                j["vanishes_mod_25"] = mpz_divisible_ui_p(c.get_mpz_t(), 25) != 0;
                j["necessary_condition"] = flag;
                text << " coefficient=" << c.get_str()
                     << " vanishes mod 25: " << (mpz_divisible_ui_p(c.get_mpz_t(), 25) ? "yes" : "no")
                     << " necessary condition: " << (flag ? "holds" : "fails");
            }
            out << (format == "json" ? j.dump() : text.str()) << '\n';
            return kPass;
        }
        if (*equiv) {
            const std::size_t N = equiv_bound.resolve(kDefaultBound);
            std::vector<std::string> names = oracle_name == "all" ? oracle_names() : std::vector{oracle_name};
            int code = kPass;
            auto arr = ordered_json::array();
            for (const auto& nm : names) {
                const auto r = oracle_equivalence(nm, N);
                if (!r.passed()) code = kFail;
                if (format == "json") {
                    ordered_json j{{"name", r.name},           {"bound", r.bound},
                                   {"oracle_count", r.oracle_count}, {"expansion_count", r.expansion_count},
                                   {"discrepancies", r.discrepancies}, {"density", r.density},
                                   {"detail", r.detail}};
                    if (r.first_discrepancy) j["first_discrepancy"] = {{"n", *r.first_discrepancy}, {"detail", r.first_detail}};
                    arr.push_back(j);
                } else {
                    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " N=" << r.bound << " oracle=" << r.oracle_count
                        << " expansion=" << r.expansion_count << " discrepancies=" << r.discrepancies;
                    if (r.first_discrepancy) out << " first at n=" << *r.first_discrepancy << ": " << r.first_detail;
                    out << '\n';
                }
            }
            if (format == "json") out << arr.dump(2) << '\n';
            return code;
        }
        if (*cor) {
            std::vector<VerifyReport> rs{partition_examples(), verify_merca(nmax), verify_pent_plus_3square(nmax),
                                         bipartition_checks(nmax), D_S_identities(nmax)};
            return emit_reports(out, rs, format);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace etaq::cli
