#pragma once

#include "etaq/eta.hpp"
#include "etaq/series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace etaq {

enum class VerifyStatus { Pass, Fail, HypothesisViolation };

std::string to_string(VerifyStatus s);

struct Mismatch {
    std::size_t exponent = 0;
    std::string lhs;
    std::string rhs;
    std::string condition;  // which side pair or which congruence failed
};

// A failing report always carries a mismatch with exponent < bound.
struct VerifyReport {
    std::string id;
    std::size_t bound = 0;
    std::optional<std::uint32_t> modulus;
    VerifyStatus status = VerifyStatus::Pass;
    std::optional<Mismatch> mismatch;
    std::string detail;

    bool passed() const { return status == VerifyStatus::Pass; }
};

std::string to_json(const VerifyReport& r);
std::string to_json(const std::vector<VerifyReport>& rs);

enum class EntryKind { Identity, Congruence };

// Each side is computed at the requested bound; the entry holds when every
// side equals the first one (modulo `modulus` for congruences).
struct RegistryEntry {
    std::string id;
    EntryKind kind = EntryKind::Identity;
    std::optional<std::uint32_t> modulus;
    std::size_t default_bound = 1000;
    std::optional<std::size_t> fixed_bound;  // prefix checks stop at their published length
    std::optional<std::size_t> sturm_bound;
    std::string statement;
    std::string note;
    std::vector<std::string> side_labels;
    std::function<std::vector<ExactSeries>(std::size_t)> exact_sides;
    std::function<std::vector<GaussSeries>(std::size_t)> gauss_sides;
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& registry_entry(std::string_view id);

// perturb adds q^k to the last side, to exercise failure reporting.
VerifyReport verify_entry(const RegistryEntry& e, std::size_t N, std::optional<std::size_t> perturb = std::nullopt);
VerifyReport verify_identity(std::string_view id, std::size_t N);
VerifyReport verify_congruence(std::string_view id, std::size_t N);

// n_1 odd and n_j even for every odd j > 1.
std::optional<std::string> mod4_main_violation(const EtaQuotient& A);
// f1 exponent = 1 (mod 3), n_i = 0 (mod 3) for 3 not dividing i > 1.
std::optional<std::string> mod9_violation(const EtaQuotient& A);

struct SecondFamilyTerm {
    std::uint32_t j;
    std::int64_t n;
};
// f1 * prod (f_j^2 / f_{2j})^{n_j}
EtaQuotient mod4_second_quotient(const std::vector<SecondFamilyTerm>& S);

VerifyReport check_mod4_main(const EtaQuotient& A, std::size_t N);
VerifyReport check_mod4_second(const std::vector<SecondFamilyTerm>& S, std::size_t N);
VerifyReport check_mod9(const EtaQuotient& A, std::size_t N);

}  // namespace etaq
