#pragma once

#include "etaq/eta.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace etaq {

using IndexSet = std::vector<std::uint32_t>;  // sorted exponents

enum class Relation { AllFiveIdentical, FourIdenticalFifthSuperset, ThreeIdenticalOneExtra, Other };

std::string to_string(Relation r);

struct Classification {
    Relation relation = Relation::Other;
    std::optional<int> which;              // superset column, or the column with the extra zero
    std::optional<int> superset_column;    // for three-identical rows, a remaining strict superset
    std::optional<std::uint32_t> extra_exponent;  // C_N
    std::optional<std::size_t> extra_ordinal;     // 1-based position of C_N in its column
    std::string description;
};

// Classification is relative to the scanned range n < N.
Classification classify(const std::array<IndexSet, 5>& sets);

struct ScanRow {
    std::string label;
    EtaQuotient candidate;
    std::size_t bound = 0;      // exact zeros are counted for n < bound
    std::size_t mod_bound = 0;  // mod-m zeros are counted for n < mod_bound
    std::uint32_t modulus = 25;
    std::array<IndexSet, 5> mod_zero;    // G_j coefficient = 0 (mod m)
    std::array<IndexSet, 5> exact_zero;  // G_j coefficient = 0
    bool mod5_identical = true;          // the five mod-5 zero sets agree
    Classification relation;

    std::array<std::size_t, 5> mod_counts() const;
    std::array<std::size_t, 5> exact_counts() const;
};

// G_j = (f1^5/f5)^j F for j = 0..4, each obtained from G_{j-1} in place.
// mod_bound defaults to N.
ScanRow quintuple_scan(const EtaQuotient& F, std::size_t N, std::uint32_t m = 25, bool exact = true,
                       std::optional<std::size_t> mod_bound = std::nullopt);

// The reference tables count mod-25 zeros over ten more terms than exact zeros.
inline constexpr std::size_t kTableModExtra = 10;

struct Candidate {
    std::string label;
    std::string expression;
};

struct CandidateError {
    std::size_t index;  // 1-based candidate position
    std::string text;
    std::string message;
};

// One expression per line, optionally preceded by a row label; '#' starts a comment.
std::vector<Candidate> read_candidates(std::istream& in);

struct TableResult {
    std::vector<ScanRow> rows;
    std::vector<CandidateError> errors;
    bool extra_columns = false;  // emit C_N and N
};

struct TableOptions {
    std::size_t bound = 15000;
    std::size_t mod_bound = 15000 + kTableModExtra;
    std::uint32_t modulus = 25;
    bool extra_columns = false;
    unsigned jobs = 1;
};

TableResult reproduce_table(const std::vector<Candidate>& candidates, const TableOptions& opt);

// C_N is written as a 1-based term position, i.e. extra exponent + 1, as in the reference table.
void write_csv(std::ostream& out, const TableResult& t);
std::string sidecar_json(const TableResult& t);

struct SetDigest {
    std::size_t length;
    std::vector<std::uint32_t> head;  // first 8 indices
    std::uint64_t fnv1a;
};
SetDigest digest(const IndexSet& s);

}  // namespace etaq
