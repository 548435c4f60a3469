#pragma once

/*
 * The pipelines behind each command-line subcommand, their result records,
 * and the two renderings (aligned text and the JSON document
 * {"command": ..., "inputs": {...}, "results": {...}}).
 */

#include "sphtd/ahss.hpp"
#include "sphtd/chern.hpp"
#include "sphtd/error.hpp"
#include "sphtd/graded.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sphtd {

struct BundleInputs {
    std::string base;
    int n = 0;
    Integer e;
    Integer h;

    friend bool operator==(const BundleInputs&, const BundleInputs&) = default;
};

struct CohomologyReport {
    BundleInputs inputs;
    std::vector<AbelianGroup> degrees;  // H^0 .. H^{4n-1}
    bool split_by_convention = false;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

struct TwistedReport {
    BundleInputs inputs;
    ParityParts cohomology;
    std::optional<KGroups> k;  // absent for bases with torsion
    std::optional<bool> agree;
    std::string notice;

    friend bool operator==(const TwistedReport&, const TwistedReport&) = default;
};

struct TDualReport {
    BundleInputs inputs;
    Integer dual_e;
    Integer dual_h;
    ParityParts cohomology_lhs;
    ParityParts cohomology_rhs;
    bool cohomology_ok = false;
    std::optional<ParityParts> k_lhs;
    std::optional<ParityParts> k_rhs;
    std::optional<bool> ktheory_ok;
    std::string notice;

    bool all_ok() const { return cohomology_ok && ktheory_ok.value_or(false); }

    friend bool operator==(const TDualReport&, const TDualReport&) = default;
};

struct ChernReport {
    int k = 1;
    int N = 0;
    bool d_squared_zero = false;
    int closure_sign = 0;
    bool published_sign_agrees = false;
    std::vector<Rational> odd_coefficients;
    bool odd_closes = false;
    std::vector<Rational> published_odd_coefficients;
    bool published_odd_closes = false;
    std::optional<int> published_odd_first_failure;

    friend bool operator==(const ChernReport&, const ChernReport&) = default;
};

using CommandResult = std::variant<CohomologyReport, TwistedReport, TDualReport, ChernReport>;

CohomologyReport run_bundle_cohomology(const BaseManifold& base, const Integer& e);
TwistedReport run_twisted(const BaseManifold& base, const Integer& e, const Integer& h);
TDualReport run_tdual(const BaseManifold& base, const Integer& e, const Integer& h);
/* Throws BadTruncation unless N >= 2k+3. */
ChernReport run_chern_verify(int k, int N);

const char* command_name(const CommandResult& result);

nlohmann::json to_document(const CommandResult& result);
/* Inverse of to_document. Throws Error(BadArguments) on malformed documents. */
CommandResult from_document(const nlohmann::json& doc);

std::string render_text(const CommandResult& result);

/* 0 success, 2 admissibility, 3 invalid base, 4 bad parameters. */
int exit_code_for(ErrorCode code);

/* Exit status a successful run should report (tdual fails unless both
 * verdicts hold). */
int exit_code_for(const CommandResult& result);

}  // namespace sphtd
