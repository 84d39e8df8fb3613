#include "etaq/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace etaq {

std::string to_string(Relation r)
{
    switch (r) {
    case Relation::AllFiveIdentical: return "AllFiveIdentical";
    case Relation::FourIdenticalFifthSuperset: return "FourIdenticalFifthSuperset";
    case Relation::ThreeIdenticalOneExtra: return "ThreeIdenticalOneExtra";
    case Relation::Other: return "Other";
    }
    return "Other";
}

namespace {

bool strict_superset(const IndexSet& big, const IndexSet& small)
{
    return big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::uint32_t> difference(const IndexSet& big, const IndexSet& small)
{
    std::vector<std::uint32_t> out;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
    return out;
}

std::string sizes(const std::array<IndexSet, 5>& sets)
{
    std::string s = "sizes";
    for (const auto& z : sets) s += " " + std::to_string(z.size());
    return s;
}

}  // namespace

Classification classify(const std::array<IndexSet, 5>& sets)
{
    Classification c;
    // Largest group of equal sets; ties go to the lowest column.
    std::array<int, 5> group{};
    for (int i = 0; i < 5; ++i) group[i] = static_cast<int>(std::count(sets.begin(), sets.end(), sets[i]));
    const int rep = static_cast<int>(std::max_element(group.begin(), group.end()) - group.begin());
    const IndexSet& common = sets[rep];
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i)
        if (sets[i] != common) rest.push_back(i);

    if (rest.empty()) {
        c.relation = Relation::AllFiveIdentical;
        c.description = "all five zero sets agree";
        return c;
    }
    if (rest.size() == 1 && strict_superset(sets[rest[0]], common)) {
        c.relation = Relation::FourIdenticalFifthSuperset;
        c.which = rest[0];
        c.description = "column " + std::to_string(rest[0]) + " strictly contains the common set of the other four";
        return c;
    }
    if (rest.size() == 2) {
        for (int k = 0; k < 2; ++k) {
            const int e = rest[k], o = rest[1 - k];
            if (!strict_superset(sets[e], common)) continue;
            const auto extra = difference(sets[e], common);
            if (extra.size() != 1) continue;
            c.relation = Relation::ThreeIdenticalOneExtra;
            c.which = e;
            c.extra_exponent = extra[0];
            c.extra_ordinal = static_cast<std::size_t>(
                std::lower_bound(sets[e].begin(), sets[e].end(), extra[0]) - sets[e].begin() + 1);
            if (strict_superset(sets[o], common)) c.superset_column = o;
            c.description = "column " + std::to_string(e) + " has one extra zero at " + std::to_string(extra[0]);
            if (c.superset_column) c.description += "; column " + std::to_string(o) + " strictly contains the common set";
            return c;
        }
    }
    c.relation = Relation::Other;
    c.description = sizes(sets) + "; most common set has " + std::to_string(group[rep]) + " copies";
    if (rest.size() == 2) {
        for (int e : rest) {
            if (!strict_superset(sets[e], common)) continue;
            const auto extra = difference(sets[e], common);
            c.description += "; column " + std::to_string(e) + " extras";
            for (std::size_t i = 0; i < extra.size() && i < 16; ++i) c.description += " " + std::to_string(extra[i]);
            if (extra.size() > 16) c.description += " ...";
        }
    }
    return c;
}

std::array<std::size_t, 5> ScanRow::mod_counts() const
{
    std::array<std::size_t, 5> out{};
    for (int j = 0; j < 5; ++j) out[j] = mod_zero[j].size();
    return out;
}

std::array<std::size_t, 5> ScanRow::exact_counts() const
{
    std::array<std::size_t, 5> out{};
    for (int j = 0; j < 5; ++j) out[j] = exact_zero[j].size();
    return out;
}

ScanRow quintuple_scan(const EtaQuotient& F, std::size_t N, std::uint32_t m, bool exact,
                       std::optional<std::size_t> mod_bound)
{
    const std::size_t M = mod_bound.value_or(N);
    if (N == 0 || M == 0) throw std::invalid_argument("scan bound must be positive");
    ScanRow row;
    row.candidate = F;
    row.bound = N;
    row.mod_bound = M;
    row.modulus = m;
    const EtaQuotient step = parse_eta("f1^5/f5");

    const ModInt R(m);
    auto g = eta_series(F, M, R);
    std::array<IndexSet, 5> mod5;
    for (int j = 0; j < 5; ++j) {
        if (j > 0) apply_eta(g, step);
        for (std::size_t n = 0; n < M; ++n) {
            if (g[n] == 0) row.mod_zero[j].push_back(static_cast<std::uint32_t>(n));
            if (m % 5 == 0 && g[n] % 5 == 0) mod5[j].push_back(static_cast<std::uint32_t>(n));
        }
    }
    if (m % 5 == 0)
        for (int j = 1; j < 5; ++j) row.mod5_identical = row.mod5_identical && mod5[j] == mod5[0];

    if (exact) {
        const ExactInt Z;
        auto G = eta_series(F, N, Z);
        for (int j = 0; j < 5; ++j) {
            if (j > 0) apply_eta(G, step);
            for (std::size_t n = 0; n < N; ++n)
                if (sgn(G[n]) == 0) row.exact_zero[j].push_back(static_cast<std::uint32_t>(n));
        }
    }
    row.relation = classify(row.mod_zero);
    return row;
}

std::vector<Candidate> read_candidates(std::istream& in)
{
    std::vector<Candidate> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        Candidate c;
        const bool labelled =
            tok.size() >= 2 && std::all_of(tok[0].begin(), tok[0].end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        if (labelled) {
            c.label = tok[0];
            tok.erase(tok.begin());
        } else {
            c.label = std::to_string(out.size() + 1);
        }
        for (const auto& t : tok) c.expression += t;
        out.push_back(std::move(c));
    }
    return out;
}

TableResult reproduce_table(const std::vector<Candidate>& candidates, const TableOptions& opt)
{
    TableResult t;
    t.extra_columns = opt.extra_columns;
    std::vector<std::optional<ScanRow>> rows(candidates.size());
    std::vector<std::optional<std::string>> errs(candidates.size());
    auto work = [&](std::size_t i) {
        try {
            const EtaQuotient F = parse_eta(candidates[i].expression);
            ScanRow r = quintuple_scan(F, opt.bound, opt.modulus, true, opt.mod_bound);
            r.label = candidates[i].label;
            rows[i] = std::move(r);
        } catch (const std::exception& e) {
            errs[i] = e.what();
        }
    };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < candidates.size(); i += jobs) work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (rows[i]) t.rows.push_back(std::move(*rows[i]));
        else t.errors.push_back({i + 1, candidates[i].expression, errs[i].value_or("unknown error")});
    }
    return t;
}

void write_csv(std::ostream& out, const TableResult& t)
{
    out << "n,F(q),mod0,mod1,mod2,mod3,mod4,zero0,zero1,zero2,zero3,zero4";
    if (t.extra_columns) out << ",C_N,N";
    out << '\n';
    for (const auto& r : t.rows) {
        out << r.label << ',' << r.candidate.to_string();
        for (auto v : r.mod_counts()) out << ',' << v;
        for (auto v : r.exact_counts()) out << ',' << v;
        if (t.extra_columns) {
            out << ',';
            if (r.relation.extra_exponent) out << *r.relation.extra_exponent + 1;
            out << ',';
            if (r.relation.extra_ordinal) out << *r.relation.extra_ordinal;
        }
        out << '\n';
    }
}

SetDigest digest(const IndexSet& s)
{
    SetDigest d;
    d.length = s.size();
    d.head.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(8, s.size())));
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t v : s)
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    d.fnv1a = h;
    return d;
}

std::string sidecar_json(const TableResult& t)
{
    using nlohmann::ordered_json;
    auto as_json = [](const IndexSet& s) {
        const auto d = digest(s);
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(d.fnv1a));
        return ordered_json{{"length", d.length}, {"head", d.head}, {"fnv1a", hex}};
    };
    ordered_json root;
    root["rows"] = ordered_json::array();
    for (const auto& r : t.rows) {
        ordered_json j;
        j["n"] = r.label;
        j["F"] = r.candidate.to_string();
        j["bound"] = r.bound;
        j["mod_bound"] = r.mod_bound;
        j["modulus"] = r.modulus;
        j["relation"] = to_string(r.relation.relation);
        j["relation_detail"] = r.relation.description;
        if (r.relation.which) j["column"] = *r.relation.which;
        if (r.relation.superset_column) j["superset_column"] = *r.relation.superset_column;
        if (r.relation.extra_exponent) {
            j["extra_exponent"] = *r.relation.extra_exponent;
            j["C_N"] = *r.relation.extra_exponent + 1;
            j["N"] = *r.relation.extra_ordinal;
        }
        j["range_relative"] = true;
        j["mod5_identical"] = r.mod5_identical;
        for (int k = 0; k < 5; ++k) {
            j["mod_zero"].push_back(as_json(r.mod_zero[k]));
            j["exact_zero"].push_back(as_json(r.exact_zero[k]));
        }
        root["rows"].push_back(std::move(j));
    }
    // Rows sharing an extra-zero exponent are listed together; no explanation is attempted.
    std::map<std::uint32_t, std::vector<std::string>> shared;
    for (const auto& r : t.rows)
        if (r.relation.extra_exponent) shared[*r.relation.extra_exponent].push_back(r.label);
    root["shared_extra_exponents"] = ordered_json::object();
    for (const auto& [e, labels] : shared)
        if (labels.size() > 1) root["shared_extra_exponents"][std::to_string(e)] = labels;
    root["errors"] = ordered_json::array();
    for (const auto& e : t.errors)
        root["errors"].push_back({{"index", e.index}, {"text", e.text}, {"message", e.message}});
    return root.dump(2);
}

}  // namespace etaq
