#pragma once

#include <optional>
#include <string>

#include "pcgraph/oracle.hpp"
#include "pcgraph/topclique.hpp"

namespace pcg {

// Results of running the brute-force side next to the analysis.
struct OracleReport {
    // "candidate-set" or "full-scan"; the latter only for q = 2, n <= 6.
    bool full_scan = false;
    bool clique_agrees = false;
    // Unset when Y is empty (nothing to dualize).
    std::optional<bool> duality_agrees;
    // Unset when the clique is empty (maximality needs a nonempty clique);
    // an empty clique is never a top, which the verdict must reflect.
    std::optional<bool> oracle_maximal;
    bool maximality_agrees = false;
    std::optional<Code> witness;

    bool all_agree() const {
        return clique_agrees && duality_agrees.value_or(true) &&
               maximality_agrees;
    }
};

struct Report {
    Mat input;
    CliqueAnalysis analysis;
    std::optional<OracleReport> oracle;
    double elapsed_ms = 0.0;
};

// Full pipeline on one generator matrix, optionally with the brute-force
// cross-check. Throws whatever the analysis throws.
Report run_classify(const Mat& m, bool with_oracle, bool naive_oracle = false);

// Stable JSON rendering: fixed key order, identical bytes for identical
// inputs apart from elapsed_ms and the witness (whose choice is not part of
// the contract). Layout documented in docs/report.schema.json.
std::string report_json(const Report& r, int indent = 2);

// Human-readable rendering of the same content.
std::string report_text(const Report& r);

}  // namespace pcg
