#include <etaq/eta.hpp>
#include <etaq/search.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace etaq {
namespace {

TEST(Classify, AllFiveIdentical)
{
    const IndexSet s{1, 4, 9};
    const auto c = classify({s, s, s, s, s});
    EXPECT_EQ(c.relation, Relation::AllFiveIdentical);
    EXPECT_FALSE(c.which);
}

TEST(Classify, FourIdenticalFifthSuperset)
{
    const IndexSet s{1, 4, 9}, big{1, 2, 4, 9, 11};
    const auto c = classify({s, s, s, big, s});
    EXPECT_EQ(c.relation, Relation::FourIdenticalFifthSuperset);
    EXPECT_EQ(c.which, 3);
}

TEST(Classify, ThreeIdenticalOneExtra)
{
    const IndexSet s{1, 4, 9}, one{1, 4, 7, 9}, big{0, 1, 4, 9, 12};
    const auto c = classify({one, s, s, big, s});
    EXPECT_EQ(c.relation, Relation::ThreeIdenticalOneExtra);
    EXPECT_EQ(c.which, 0);
    EXPECT_EQ(c.extra_exponent, 7u);
    EXPECT_EQ(c.extra_ordinal, 3u);
    EXPECT_EQ(c.superset_column, 3);
}

TEST(Classify, Other)
{
    EXPECT_EQ(classify({IndexSet{1}, IndexSet{2}, IndexSet{3}, IndexSet{4}, IndexSet{5}}).relation, Relation::Other);
    // Superset that is not a single-element extension.
    const IndexSet s{1}, two{1, 2, 3}, other{5};
    EXPECT_EQ(classify({s, s, s, two, other}).relation, Relation::Other);
    // Four equal, fifth not a superset.
    EXPECT_EQ(classify({s, s, s, s, other}).relation, Relation::Other);
    EXPECT_EQ(to_string(Relation::Other), "Other");
}

TEST(QuintupleScan, ColumnsAreSuccessiveProducts)
{
    const auto F = parse_eta("f1^2*f5/f2");
    const std::size_t N = 400;
    const auto row = quintuple_scan(F, N, 25, true, N + 10);
    EXPECT_EQ(row.bound, N);
    EXPECT_EQ(row.mod_bound, N + 10);
    for (int j = 0; j < 5; ++j) {
        const auto G = F * parse_eta("f1^5/f5").pow(j);
        const auto mod = eta_series(G, N + 10, ModInt(25));
        const auto ex = eta_series(G, N, ExactInt{});
        IndexSet zm, ze;
        for (std::size_t n = 0; n < N + 10; ++n)
            if (mod[n] == 0) zm.push_back(static_cast<std::uint32_t>(n));
        for (std::size_t n = 0; n < N; ++n)
            if (sgn(ex[n]) == 0) ze.push_back(static_cast<std::uint32_t>(n));
        EXPECT_EQ(row.mod_zero[j], zm) << j;
        EXPECT_EQ(row.exact_zero[j], ze) << j;
    }
    EXPECT_THROW(quintuple_scan(F, 0), std::invalid_argument);
}

TEST(Candidates, ReadLabelsCommentsAndBlankLines)
{
    std::istringstream in("# header\n\n8 f1*f2^38/f4^14/f5^3\nf1^2 * f5   # trailing\n  34   f1*f5\n");
    const auto c = read_candidates(in);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].label, "8");
    EXPECT_EQ(c[0].expression, "f1*f2^38/f4^14/f5^3");
    EXPECT_EQ(c[1].label, "2");
    EXPECT_EQ(c[1].expression, "f1^2*f5");
    EXPECT_EQ(c[2].label, "34");
}

TEST(Table, EmptyCandidateListGivesHeaderOnly)
{
    const auto t = reproduce_table({}, TableOptions{});
    std::ostringstream out;
    write_csv(out, t);
    EXPECT_EQ(out.str(), "n,F(q),mod0,mod1,mod2,mod3,mod4,zero0,zero1,zero2,zero3,zero4\n");
    const auto j = nlohmann::json::parse(sidecar_json(t));
    EXPECT_TRUE(j["rows"].empty());
    EXPECT_TRUE(j["errors"].empty());
}

TEST(Table, ParseErrorsAreReportedAndOrderIsKept)
{
    TableOptions opt;
    opt.bound = 300;
    opt.mod_bound = 310;
    opt.extra_columns = true;
    const std::vector<Candidate> cands{{"1", "f1*f5"}, {"2", "f1+"}, {"3", "f1^6"}, {"4", "f1^10"}};
    const auto serial = reproduce_table(cands, opt);
    opt.jobs = 3;
    const auto parallel = reproduce_table(cands, opt);
    ASSERT_EQ(serial.rows.size(), 3u);
    ASSERT_EQ(serial.errors.size(), 1u);
    EXPECT_EQ(serial.errors[0].index, 2u);
    std::ostringstream a, b;
    write_csv(a, serial);
    write_csv(b, parallel);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(sidecar_json(serial), sidecar_json(parallel));
    EXPECT_NE(a.str().find(",C_N,N\n"), std::string::npos);
    EXPECT_EQ(serial.rows[1].label, "3");
}

TEST(Table, ExtraColumnsWriteOneBasedPosition)
{
    TableResult t;
    t.extra_columns = true;
    ScanRow r;
    r.label = "7";
    r.candidate = parse_eta("f1");
    r.relation.relation = Relation::ThreeIdenticalOneExtra;
    r.relation.extra_exponent = 10440;
    r.relation.extra_ordinal = 5076;
    t.rows.push_back(r);
    std::ostringstream out;
    write_csv(out, t);
    EXPECT_NE(out.str().find("\n7,f1,0,0,0,0,0,0,0,0,0,0,10441,5076\n"), std::string::npos) << out.str();
}

TEST(Digest, StableAndSensitive)
{
    const IndexSet s{3, 9, 27};
    EXPECT_EQ(digest(s).fnv1a, digest(IndexSet{3, 9, 27}).fnv1a);
    EXPECT_NE(digest(s).fnv1a, digest(IndexSet{3, 9, 28}).fnv1a);
    EXPECT_EQ(digest(IndexSet{}).fnv1a, 0xcbf29ce484222325ull);
    EXPECT_EQ(digest(s).head, (std::vector<std::uint32_t>{3, 9, 27}));
}

}  // namespace
}  // namespace etaq
