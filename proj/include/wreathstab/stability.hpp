#pragma once

#include <string>
#include <vector>

#include "wreathstab/module_structure.hpp"
#include "wreathstab/numbers.hpp"
#include "wreathstab/ray_partitions.hpp"

namespace wreathstab {

struct ClaimVerdict {
    std::string claim;
    std::string verdict;  // PASS, FAIL or SKIPPED
    std::string reason;   // empty on PASS
};

struct CrossValidationPoint {
    int n = 0;
    BigInt predicted;
    BigInt enumerated;
    bool match = false;
};

// Notes attached by the annotation passes below.
struct CoefficientNote {
    bool present = false;
    std::string text;
};

struct UnorderedNote {
    bool present = false;
    int onset = 0;
    int theory_bound = 0;
    bool stable_value_computable = false;
    std::string text;
};

// Everything one end-to-end run certifies about the cohomology of the
// spaces with n equal clusters of k points in R^{p,q}, in one degree d:
// the Betti window, the recovered generator ranks, the implied onsets, and
// a verdict per claim. Reports with identical inputs are byte-identical.
struct StabilityReport {
    int k = 1, p = 0, q = 2, d = 0;
    int window = 0;         // betti computed for n = 0..window
    int extrapolation = 0;  // requested cross-validation points
    std::vector<BigInt> betti;
    std::vector<BigInt> generators;
    int generation_degree = 0;
    bool zero_module = false;
    bool truncated = false;  // window cut short by the cell cap
    StableRanges ranges;
    std::vector<CrossValidationPoint> cross_validation;
    std::vector<ClaimVerdict> claims;
    CoefficientNote coefficient_note;
    UnorderedNote unordered_note;

    bool all_pass() const;
};

struct AnalysisOptions {
    int window = -1;        // default: floor(2d/(q-1)) + 2
    int extrapolation = 2;  // fresh-enumeration checks beyond the window
    int max_cells = kDefaultMaxCells;
};

// The pipeline: enumerate the Betti sequence, recover generator ranks by
// the inverse binomial transform, check nonnegativity, the generation
// bound floor(2d/(q-1)), extrapolation against fresh enumeration, and
// exact vanishing of finite differences. Requires q >= 2. When the cell
// cap truncates the window, claims degrade to SKIPPED, never partial PASS.
StabilityReport analyze(int k, int p, int q, int d, const AnalysisOptions& options = {});

// Records that the rank claims apply verbatim to homology and cohomology
// with integral or rational coefficients: the cohomology is free abelian.
StabilityReport& annotate_coefficients(StabilityReport& report);

// Records the stabilization onset for the unordered quotients (dimensions
// of coinvariants): n >= generation degree, against the a-priori bound
// floor(2d/(q-1)). The stable value itself is marked not computable: the
// group action on the basis is not determined by rank data.
StabilityReport& annotate_unordered_onset(StabilityReport& report);

std::string stability_report_to_json(const StabilityReport& report);
std::string stability_report_to_csv(const StabilityReport& report);
std::string stability_report_to_tex(const StabilityReport& report);

}  // namespace wreathstab
