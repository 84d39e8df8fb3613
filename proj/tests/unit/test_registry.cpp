#include <etaq/verify.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <set>

namespace etaq {
namespace {

TEST(Registry, IdsAreUniqueAndWellFormed)
{
    std::set<std::string> ids;
    for (const auto& e : registry()) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        EXPECT_FALSE(e.statement.empty()) << e.id;
        EXPECT_NE(static_cast<bool>(e.exact_sides), static_cast<bool>(e.gauss_sides)) << e.id;
        EXPECT_EQ(e.kind == EntryKind::Congruence, e.modulus.has_value()) << e.id;
    }
    EXPECT_GE(ids.size(), 30u);
    EXPECT_THROW(registry_entry("no-such-identity"), std::invalid_argument);
}

class EveryEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryEntry, PassesAtASmallBoundAndCatchesPerturbation)
{
    const auto& e = registry_entry(GetParam());
    const std::size_t N = std::min<std::size_t>(e.default_bound, 300);
    const auto r = verify_entry(e, N);
    EXPECT_TRUE(r.passed()) << r.id << " at q^" << (r.mismatch ? r.mismatch->exponent : 0) << ": "
                            << (r.mismatch ? r.mismatch->condition : "");
    const std::size_t used = e.fixed_bound ? std::min(N, *e.fixed_bound) : N;
    EXPECT_EQ(r.bound, used);
    for (std::size_t k : {std::size_t(0), used / 2, used - 1}) {
        const auto bad = verify_entry(e, N, k);
        ASSERT_EQ(bad.status, VerifyStatus::Fail) << e.id << " perturbed at " << k;
        ASSERT_TRUE(bad.mismatch.has_value());
        EXPECT_LE(bad.mismatch->exponent, k);
        EXPECT_LT(bad.mismatch->exponent, bad.bound);
    }
}

std::vector<std::string> all_ids()
{
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    return ids;
}

INSTANTIATE_TEST_SUITE_P(Registry, EveryEntry, ::testing::ValuesIn(all_ids()),
                         [](const auto& info) {
                             std::string s = info.param;
                             for (auto& c : s)
                                 if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                             return s;
                         });

TEST(Registry, PerturbedMismatchIsExactlyAtTheShiftedTerm)
{
    // A perturbation at k leaves every earlier term intact, so the first
    // mismatch of a passing identity is k itself.
    const auto bad = verify_entry(registry_entry("neg-q-product"), 200, 137);
    ASSERT_TRUE(bad.mismatch);
    EXPECT_EQ(bad.mismatch->exponent, 137u);
}

TEST(Registry, KindSpecificEntryPoints)
{
    EXPECT_TRUE(verify_identity("f1-2dissect-a", 200).passed());
    EXPECT_TRUE(verify_congruence("Jbar16-mod4-a", 200).passed());
    EXPECT_THROW(verify_identity("Jbar16-mod4-a", 200), std::invalid_argument);
    EXPECT_THROW(verify_congruence("neg-q-product", 200), std::invalid_argument);
    EXPECT_THROW(verify_entry(registry_entry("neg-q-product"), 0), std::invalid_argument);
}

TEST(Registry, PrefixEntriesStopAtThePublishedLength)
{
    const auto r = verify_entry(registry_entry("prefix-S1"), 3000);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.bound, 198u);
}

TEST(Report, JsonCarriesMismatch)
{
    const auto bad = verify_entry(registry_entry("neg-q-product"), 100, 5);
    const auto j = nlohmann::json::parse(to_json(bad));
    EXPECT_EQ(j["id"], "neg-q-product");
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["bound"], 100);
    EXPECT_TRUE(j["modulus"].is_null());
    EXPECT_EQ(j["mismatch"]["exponent"], 5);
    const auto arr = nlohmann::json::parse(to_json(std::vector<VerifyReport>{bad, verify_entry(registry_entry("Jbar16-mod4-a"), 50)}));
    ASSERT_EQ(arr.size(), 2u);
    EXPECT_EQ(arr[1]["status"], "pass");
    EXPECT_EQ(arr[1]["modulus"], 4);
    EXPECT_FALSE(arr[1].contains("mismatch"));
}

}  // namespace
}  // namespace etaq
