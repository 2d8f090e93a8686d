#include "wreathstab/stability.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>

#include "wreathstab/combinatorics.hpp"

namespace wreathstab {

namespace {

using ordered_json = nlohmann::ordered_json;

ClaimVerdict pass(std::string claim) { return {std::move(claim), "PASS", ""}; }
ClaimVerdict fail(std::string claim, std::string reason) {
    return {std::move(claim), "FAIL", std::move(reason)};
}
ClaimVerdict skipped(std::string claim, std::string reason) {
    return {std::move(claim), "SKIPPED", std::move(reason)};
}

}  // namespace

bool StabilityReport::all_pass() const {
    for (const auto& c : claims)
        if (c.verdict == "FAIL") return false;
    return true;
}

StabilityReport analyze(int k, int p, int q, int d, const AnalysisOptions& options) {
    if (k < 1) throw std::invalid_argument("analyze: k must be >= 1");
    if (p < 0) throw std::invalid_argument("analyze: p must be >= 0");
    if (q < 2) throw std::invalid_argument("analyze: stability analysis requires q >= 2");
    if (d < 0) throw std::invalid_argument("analyze: d must be >= 0");

    int bound = (2 * d) / (q - 1);
    int window = options.window >= 0 ? options.window : bound + 2;
    if (window < bound + 1)
        throw std::invalid_argument("analyze: window must reach " + std::to_string(bound + 1) +
                                    " to determine all generator ranks");
    if (options.extrapolation < 0) throw std::invalid_argument("analyze: negative extrapolation");

    StabilityReport report;
    report.k = k;
    report.p = p;
    report.q = q;
    report.d = d;
    report.window = window;
    report.extrapolation = options.extrapolation;

    for (int n = 0; n <= window; ++n) {
        if (k * n > options.max_cells) {
            report.truncated = true;
            break;
        }
        report.betti.push_back(betti(ClusterType::uniform(k, n), p, q, d, options.max_cells));
    }

    if (report.truncated) {
        std::string reason = "window truncated at " + std::to_string(report.betti.size()) +
                             " of " + std::to_string(window + 1) + " terms by the cell cap";
        for (const char* claim : {"generatorsNonnegative", "generationDegreeWithinBound",
                                  "extrapolationMatches", "finiteDifferencesVanish"})
            report.claims.push_back(skipped(claim, reason));
        return report;
    }

    report.generators = generator_ranks(report.betti);
    report.zero_module = true;
    report.generation_degree = 0;
    for (size_t m = 0; m < report.generators.size(); ++m) {
        if (report.generators[m] != 0) {
            report.zero_module = false;
            report.generation_degree = static_cast<int>(m);
        }
    }

    bool nonneg = true;
    for (const auto& t : report.generators) nonneg = nonneg && t >= 0;
    report.claims.push_back(nonneg ? pass("generatorsNonnegative")
                                   : fail("generatorsNonnegative",
                                          "a recovered generator rank is negative; the sequence "
                                          "is not the rank sequence of a free module"));

    if (report.generation_degree <= bound) {
        report.ranges = stable_ranges(report.generation_degree, q, d);
        report.claims.push_back(pass("generationDegreeWithinBound"));
    } else {
        report.ranges.generation_degree = report.generation_degree;
        report.ranges.gen_deg_theory_bound = bound;
        report.ranges.unordered_theory_bound = bound;
        report.ranges.rep_stab_theory_bound = (4 * d) / (q - 1);
        report.ranges.rep_stab_onset = 2 * report.generation_degree;
        report.ranges.unordered_onset = report.generation_degree;
        report.claims.push_back(
            fail("generationDegreeWithinBound",
                 "generation degree " + std::to_string(report.generation_degree) +
                     " exceeds the bound " + std::to_string(bound)));
    }

    // cross-validation by fresh enumeration beyond the window
    std::vector<BigInt> sampled = report.betti;
    bool extrapolation_capped = false;
    bool extrapolation_ok = true;
    for (int i = 1; i <= options.extrapolation; ++i) {
        int n = window + i;
        if (k * n > options.max_cells) {
            extrapolation_capped = true;
            break;
        }
        CrossValidationPoint point;
        point.n = n;
        point.predicted = predicted_rank(report.generators, n);
        point.enumerated = betti(ClusterType::uniform(k, n), p, q, d, options.max_cells);
        point.match = point.predicted == point.enumerated;
        extrapolation_ok = extrapolation_ok && point.match;
        sampled.push_back(point.enumerated);
        report.cross_validation.push_back(std::move(point));
    }
    if (options.extrapolation == 0) {
        report.claims.push_back(skipped("extrapolationMatches", "no extrapolation requested"));
    } else if (extrapolation_capped) {
        report.claims.push_back(
            skipped("extrapolationMatches", "extrapolation points exceed the cell cap"));
    } else {
        report.claims.push_back(extrapolation_ok
                                    ? pass("extrapolationMatches")
                                    : fail("extrapolationMatches",
                                           "an extrapolated rank differs from fresh enumeration"));
    }

    // exact polynomiality of the sampled sequence
    int order = report.generation_degree + 1;
    auto diffs = forward_differences(sampled, order);
    if (diffs.empty()) {
        report.claims.push_back(
            skipped("finiteDifferencesVanish", "sampled sequence shorter than the difference order"));
    } else {
        bool vanish = true;
        for (const auto& v : diffs) vanish = vanish && v == 0;
        report.claims.push_back(vanish ? pass("finiteDifferencesVanish")
                                       : fail("finiteDifferencesVanish",
                                              "differences of order " + std::to_string(order) +
                                                  " do not vanish on the sampled range"));
    }
    return report;
}

StabilityReport& annotate_coefficients(StabilityReport& report) {
    report.coefficient_note.present = true;
    report.coefficient_note.text =
        "cohomology is free abelian, so the stated ranks hold for H_d and H^d with integral or "
        "rational coefficients, with no torsion";
    return report;
}

StabilityReport& annotate_unordered_onset(StabilityReport& report) {
    report.unordered_note.present = true;
    report.unordered_note.onset = report.generation_degree;
    report.unordered_note.theory_bound = report.ranges.unordered_theory_bound;
    report.unordered_note.stable_value_computable = false;
    report.unordered_note.text =
        "ranks of the unordered quotients (coinvariants) stabilize for n >= the onset; the "
        "stable value is not computable from rank data because the group action on the basis "
        "is not determined";
    return report;
}

namespace {

long long json_int(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rank exceeds the JSON integer range");
    return static_cast<long long>(v);
}

ordered_json report_json(const StabilityReport& r) {
    ordered_json j;
    j["schemaVersion"] = 1;
    j["inputs"] = {{"k", r.k},
                   {"p", r.p},
                   {"q", r.q},
                   {"d", r.d},
                   {"window", r.window},
                   {"extrapolation", r.extrapolation}};
    auto integers = [](const std::vector<BigInt>& v) {
        std::vector<long long> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(json_int(x));
        return out;
    };
    j["betti"] = integers(r.betti);
    j["generators"] = integers(r.generators);
    j["generationDegree"] = r.generation_degree;
    j["zeroModule"] = r.zero_module;
    j["truncated"] = r.truncated;
    j["ranges"] = {{"generationDegree", r.ranges.generation_degree},
                   {"generationTheoryBound", r.ranges.gen_deg_theory_bound},
                   {"repStabOnset", r.ranges.rep_stab_onset},
                   {"repStabTheoryBound", r.ranges.rep_stab_theory_bound},
                   {"unorderedOnset", r.ranges.unordered_onset},
                   {"unorderedTheoryBound", r.ranges.unordered_theory_bound}};
    j["crossValidation"] = ordered_json::array();
    for (const auto& point : r.cross_validation)
        j["crossValidation"].push_back({{"n", point.n},
                                        {"predicted", json_int(point.predicted)},
                                        {"enumerated", json_int(point.enumerated)},
                                        {"match", point.match}});
    j["claims"] = ordered_json::array();
    for (const auto& claim : r.claims)
        j["claims"].push_back(
            {{"claim", claim.claim}, {"verdict", claim.verdict}, {"reason", claim.reason}});
    if (r.coefficient_note.present)
        j["coefficients"] = {{"appliesTo", {"homology", "cohomology"}},
                             {"rings", {"Z", "Q"}},
                             {"torsionFree", true},
                             {"note", r.coefficient_note.text}};
    if (r.unordered_note.present)
        j["unordered"] = {{"onset", r.unordered_note.onset},
                          {"theoryBound", r.unordered_note.theory_bound},
                          {"stableValueComputable", r.unordered_note.stable_value_computable},
                          {"note", r.unordered_note.text}};
    return j;
}

}  // namespace

std::string stability_report_to_json(const StabilityReport& report) {
    return report_json(report).dump(2) + "\n";
}

std::string stability_report_to_csv(const StabilityReport& report) {
    std::string s = "series,index,value\n";
    for (size_t n = 0; n < report.betti.size(); ++n)
        s += "betti," + std::to_string(n) + ',' + report.betti[n].str() + '\n';
    for (size_t m = 0; m < report.generators.size(); ++m)
        s += "generator," + std::to_string(m) + ',' + report.generators[m].str() + '\n';
    for (const auto& point : report.cross_validation)
        s += "extrapolated," + std::to_string(point.n) + ',' + point.enumerated.str() + '\n';
    return s;
}

std::string stability_report_to_tex(const StabilityReport& report) {
    std::string s = "\\begin{tabular}{r|";
    for (size_t i = 0; i < report.betti.size() + report.cross_validation.size(); ++i) s += 'r';
    s += "}\n$n$";
    for (size_t n = 0; n < report.betti.size(); ++n) s += " & " + std::to_string(n);
    for (const auto& point : report.cross_validation) s += " & " + std::to_string(point.n);
    s += " \\\\\n\\hline\n$\\operatorname{rk} H^{" + std::to_string(report.d) + "}$";
    for (const auto& b : report.betti) s += " & " + b.str();
    for (const auto& point : report.cross_validation) s += " & " + point.enumerated.str();
    s += " \\\\\n\\end{tabular}\n";
    return s;
}

}  // namespace wreathstab
