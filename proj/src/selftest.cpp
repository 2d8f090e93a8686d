#include "wreathstab/selftest.hpp"

#include <chrono>
#include <iomanip>
#include <tuple>

#include "wreathstab/char_poly.hpp"
#include "wreathstab/class_functions.hpp"
#include "wreathstab/combinatorics.hpp"
#include "wreathstab/module_structure.hpp"
#include "wreathstab/ray_partitions.hpp"
#include "wreathstab/stability.hpp"
#include "wreathstab/wreath_chars.hpp"
#include "wreathstab/wreath_group.hpp"

namespace wreathstab {

namespace {

// Collects the first failure; a criterion passes when nothing was reported.
struct Checker {
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        if (!ok && first_failure.empty()) first_failure = what;
    }
};

CriterionResult betti_permutation_oracle() {
    Checker c;
    for (int n = 0; n <= 8; ++n) {
        std::vector<BigInt> by_cycles(n + 1, 0);
        for (const auto& perm : all_permutations(n)) ++by_cycles[perm.cycles().size()];
        ClusterType K = ClusterType::uniform(1, n);
        for (int d = 0; d <= 5; ++d) {
            BigInt expected = (n - d >= 0 && n - d <= n) ? by_cycles[n - d] : BigInt(0);
            if (n == 0) expected = d == 0 ? 1 : 0;
            c.expect(betti(K, 0, 2, d) == expected,
                     "betti mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }
    return {1, "ray-partition ranks match the permutation cycle-count oracle", c.first_failure.empty(),
            c.first_failure};
}

CriterionResult degree_zero_normalization() {
    Checker c;
    // ranks are invariant under permuting rows, so partitions cover every
    // cluster type of each total size
    for (int cells = 1; cells <= 10; ++cells) {
        for (const auto& shape : partitions_of(cells)) {
            ClusterType K(shape.parts());
            for (int q = 2; q <= 4; ++q)
                for (int p = 0; p <= 2; ++p)
                    c.expect(betti(K, p, q, 0) == 1,
                             "degree-0 rank != 1 at K = " + shape.to_string() +
                                 " q=" + std::to_string(q) + " p=" + std::to_string(p));
        }
    }
    return {2, "degree-0 rank is 1 for q >= 2, every table shape through 10 cells",
            c.first_failure.empty(), c.first_failure};
}

CriterionResult conjugacy_classification() {
    Checker c;
    for (auto [k, n] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        WreathGroup group(k, n);
        std::vector<WreathElement> elems;
        for (long long i = 0; i < group.order(); ++i) elems.push_back(group.element(i));
        std::map<WreathElement, int> orbit;
        int orbits = 0;
        for (const auto& x : elems) {
            if (orbit.count(x)) continue;
            for (const auto& g : elems) orbit[multiply(multiply(g, x), inverse(g))] = orbits;
            ++orbits;
        }
        for (const auto& x : elems)
            for (const auto& y : elems)
                c.expect((type_of(x) == type_of(y)) == (orbit.at(x) == orbit.at(y)),
                         "type equality differs from conjugacy in (" + std::to_string(k) + "," +
                             std::to_string(n) + ")");
        int s = static_cast<int>(partitions_of(k).size());
        c.expect(BigInt(orbits) == class_count_formula(s, n),
                 "class count mismatch in (" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
    c.expect(class_count_formula(2, 2) == 5, "class count formula (2,2) != 5");
    c.expect(class_count_formula(2, 3) == 10, "class count formula (2,3) != 10");
    return {3, "type matrices classify conjugacy; class counts match the composition formula",
            c.first_failure.empty(), c.first_failure};
}

CriterionResult character_completeness() {
    Checker c;
    const std::map<std::pair<int, int>, int> orders{{{2, 2}, 8}, {{2, 3}, 48}, {{3, 2}, 72}};
    for (const auto& [kn, order] : orders) {
        auto table = character_table(kn.first, kn.second);
        c.expect(table->labels.size() == table->classes->classes.size(),
                 "irreducible count != class count");
        BigInt square_sum = 0;
        for (size_t i = 0; i < table->characters.size(); ++i) {
            c.expect(table->characters[i].integer_valued(), "a character value is not integral");
            BigInt dim = numerator(table->characters[i].at_identity());
            square_sum += dim * dim;
            for (size_t j = i; j < table->characters.size(); ++j) {
                BigRat ip = inner_product(table->characters[i], table->characters[j]);
                c.expect(ip == (i == j ? BigRat(1) : BigRat(0)), "characters are not orthonormal");
            }
        }
        c.expect(square_sum == order, "dimension square sum != group order");

        // independent route: decomposing the regular character must return
        // every label with multiplicity equal to its dimension
        auto regular = decompose(ClassFunction::regular(table->classes));
        for (size_t i = 0; i < table->labels.size(); ++i) {
            auto it = regular.find(table->labels[i]);
            c.expect(it != regular.end() &&
                         it->second == irrep_dimension(kn.first, table->labels[i]),
                     "regular character decomposition disagrees with the dimensions");
        }
    }
    return {4, "irreducible characters are orthonormal, integral and complete", c.first_failure.empty(),
            c.first_failure};
}

const std::vector<std::tuple<int, int, int>>& charpoly_scales() {
    static const std::vector<std::tuple<int, int, int>> scales{
        {2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {1, 2, 4}};
    return scales;
}

CriterionResult character_polynomial_formula() {
    Checker c;
    for (auto [k, d, n] : charpoly_scales()) {
        auto small = character_table(k, d);
        auto big = class_table(k, n);
        for (const auto& chi : small->characters) {
            CharacterPolynomial poly = character_polynomial_mt(chi);
            c.expect(poly.degree() == d, "character polynomial degree != d");
            ClassFunction ind = induce_with_trivial(chi, n);
            for (const auto& cls : big->classes)
                c.expect(poly.evaluate(cls.type) == ind.value_at(cls.type),
                         "character polynomial disagrees with the induced character at (" +
                             std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(n) +
                             ")");
        }
    }
    return {5, "character polynomials reproduce brute-force induced characters", c.first_failure.empty(),
            c.first_failure};
}

CriterionResult pieri_rule() {
    Checker c;
    for (auto [k, d, n] : charpoly_scales()) {
        auto small = character_table(k, d);
        for (size_t s = 0; s < small->labels.size(); ++s) {
            auto mults = decompose(induce_with_trivial(small->characters[s], n));
            auto expected = pieri_labels(k, d, small->labels[s], n);
            c.expect(mults.size() == expected.size(), "constituent count differs from the strip count");
            for (const auto& label : expected) {
                auto it = mults.find(label);
                c.expect(it != mults.end() && it->second == 1,
                         "a horizontal-strip label is missing or has multiplicity != 1");
            }
        }
    }
    return {6, "induction against the trivial factor branches by horizontal strips",
            c.first_failure.empty(), c.first_failure};
}

const std::vector<std::tuple<int, int, int, int>>& pipeline_scales() {
    static const std::vector<std::tuple<int, int, int, int>> scales{
        {1, 0, 2, 1}, {1, 0, 2, 2}, {2, 1, 2, 1}, {2, 0, 3, 2}};
    return scales;
}

const StabilityReport& pipeline_report(size_t index) {
    static std::vector<StabilityReport> reports = [] {
        std::vector<StabilityReport> out;
        for (auto [k, p, q, d] : pipeline_scales()) out.push_back(analyze(k, p, q, d));
        return out;
    }();
    return reports[index];
}

CriterionResult structure_recovery() {
    Checker c;
    for (size_t i = 0; i < pipeline_scales().size(); ++i) {
        const StabilityReport& r = pipeline_report(i);
        int bound = (2 * r.d) / (r.q - 1);
        for (size_t m = 0; m < r.generators.size(); ++m) {
            c.expect(r.generators[m] >= 0, "negative generator rank");
            if (static_cast<int>(m) > bound)
                c.expect(r.generators[m] == 0, "generator rank above the generation bound");
        }
        c.expect(r.cross_validation.size() == 2, "expected two extrapolation points");
        for (const auto& point : r.cross_validation)
            c.expect(point.match, "extrapolated rank differs from fresh enumeration");
        for (const auto& claim : r.claims)
            c.expect(claim.verdict == "PASS", "claim " + claim.claim + ": " + claim.verdict);
    }
    return {7, "generator ranks are nonnegative, bounded in degree, and predictive",
            c.first_failure.empty(), c.first_failure};
}

CriterionResult polynomial_growth() {
    Checker c;
    for (size_t i = 0; i < pipeline_scales().size(); ++i) {
        const StabilityReport& r = pipeline_report(i);
        std::vector<BigInt> sampled = r.betti;
        for (const auto& point : r.cross_validation) sampled.push_back(point.enumerated);
        int order = (2 * r.d) / (r.q - 1) + 1;
        auto diffs = forward_differences(sampled, order);
        c.expect(!diffs.empty(), "sampled window shorter than the difference order");
        for (const auto& v : diffs)
            c.expect(v == 0, "finite differences of the bounding order do not vanish");
    }
    return {8, "Betti sequences have vanishing differences of the bounding order",
            c.first_failure.empty(), c.first_failure};
}

CriterionResult stirling_properties() {
    Checker c;
    for (int n = 1; n <= 12; ++n)
        for (int t = 1; t <= n; ++t)
            c.expect(stirling2(n, t) == BigInt(t) * stirling2(n - 1, t) + stirling2(n - 1, t - 1),
                     "Stirling recurrence fails");
    for (int t = 0; t <= 3; ++t) {
        std::vector<BigInt> seq;
        for (int n = 3 * t + 3; n <= 5 * t + 14; ++n) seq.push_back(stirling2(n, n - t));
        auto diffs = forward_differences(seq, 2 * t + 1);
        c.expect(!diffs.empty(), "window too short for the difference order");
        for (const auto& v : diffs)
            c.expect(v == 0, "S(n, n-t) differences of order 2t+1 do not vanish");
    }
    return {9, "Stirling recurrence holds and S(n, n-t) grows polynomially", c.first_failure.empty(),
            c.first_failure};
}

CriterionResult padding_sequence() {
    Checker c;
    Multipartition mp({Partition({1}), Partition({1, 1}), Partition({2})});
    const std::map<int, Multipartition> expected{
        {6, Multipartition({Partition({1, 1}), Partition({1, 1}), Partition({2})})},
        {7, Multipartition({Partition({2, 1}), Partition({1, 1}), Partition({2})})},
        {8, Multipartition({Partition({3, 1}), Partition({1, 1}), Partition({2})})},
        {9, Multipartition({Partition({4, 1}), Partition({1, 1}), Partition({2})})}};
    for (const auto& [n, want] : expected) {
        PaddedLabel got = pad_multipartition(mp, n);
        c.expect(!got.below_threshold && got.label == want,
                 "padded label at n=" + std::to_string(n) + " is wrong");
    }
    c.expect(pad_multipartition(mp, 5).below_threshold, "n below threshold must give the zero marker");
    return {10, "row padding reproduces the reference sequence", c.first_failure.empty(),
            c.first_failure};
}

}  // namespace

std::vector<CriterionResult> run_criteria(
    const std::function<void(const CriterionResult&, double)>& on_result) {
    const std::vector<CriterionResult (*)()> criteria{
        betti_permutation_oracle, degree_zero_normalization, conjugacy_classification,
        character_completeness,   character_polynomial_formula, pieri_rule,
        structure_recovery,       polynomial_growth,          stirling_properties,
        padding_sequence};
    std::vector<CriterionResult> results;
    for (auto criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        results.push_back(criterion());
        if (on_result) {
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            on_result(results.back(), ms);
        }
    }
    return results;
}

bool run_selftest(std::ostream& out) {
    bool all = true;
    for (const auto& r : run_criteria()) {
        out << "criterion " << std::setw(2) << std::setfill('0') << r.id << " "
            << (r.pass ? "PASS" : "FAIL") << " " << r.title;
        if (!r.pass) out << " [" << r.detail << "]";
        out << "\n";
        all = all && r.pass;
    }
    out << (all ? "selftest: all criteria passed" : "selftest: FAILURES PRESENT") << "\n";
    return all;
}

}  // namespace wreathstab
