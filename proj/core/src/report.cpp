#include "etaq/verify.hpp"

#include <json.hpp>

namespace etaq {

namespace {

nlohmann::ordered_json as_json(const VerifyReport& r)
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["bound"] = r.bound;
    j["modulus"] = r.modulus ? nlohmann::ordered_json(*r.modulus) : nlohmann::ordered_json(nullptr);
    j["status"] = to_string(r.status);
    if (r.mismatch) {
        j["mismatch"] = {{"exponent", r.mismatch->exponent},
                         {"lhs", r.mismatch->lhs},
                         {"rhs", r.mismatch->rhs},
                         {"condition", r.mismatch->condition}};
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

}  // namespace

std::string to_json(const VerifyReport& r) { return as_json(r).dump(); }

std::string to_json(const std::vector<VerifyReport>& rs)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(as_json(r));
    return arr.dump(2);
}

}  // namespace etaq
