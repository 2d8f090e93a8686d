#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wreathstab/char_poly.hpp"
#include "wreathstab/class_functions.hpp"
#include "wreathstab/module_structure.hpp"
#include "wreathstab/ray_partitions.hpp"
#include "wreathstab/selftest.hpp"
#include "wreathstab/stability.hpp"
#include "wreathstab/wreath_chars.hpp"
#include "wreathstab/wreath_group.hpp"

namespace {

using namespace wreathstab;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCapExceeded = 2;

struct Caps {
    int max_cells = kDefaultMaxCells;
    long long max_group_order = kDefaultMaxGroupOrder;
    bool force = false;

    // Raising a cap past its built-in default requires --force.
    void validate() const {
        if (!force && max_cells > kDefaultMaxCells)
            throw std::invalid_argument("--max-cells above " + std::to_string(kDefaultMaxCells) +
                                        " requires --force");
        if (!force && max_group_order > kDefaultMaxGroupOrder)
            throw std::invalid_argument("--max-group-order above " +
                                        std::to_string(kDefaultMaxGroupOrder) + " requires --force");
        if (force && (max_cells > kDefaultMaxCells || max_group_order > kDefaultMaxGroupOrder))
            std::cerr << "warning: caps raised beyond the safe defaults; enumeration cost grows "
                         "factorially\n";
    }
};

long long env_or(const char* name, long long fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    try {
        return std::stoll(value);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + ": not an integer");
    }
}

ClusterType parse_cluster_type(const std::string& spec) {
    std::vector<int> sizes;
    std::string token;
    for (char ch : spec + ",") {
        if (ch == ',') {
            if (!token.empty()) {
                try {
                    sizes.push_back(std::stoi(token));
                } catch (const std::out_of_range&) {
                    throw std::invalid_argument("--K: cluster size out of range: " + token);
                }
                token.clear();
            }
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            token += ch;
        } else {
            throw std::invalid_argument("--K: expected a comma-separated list of cluster sizes");
        }
    }
    if (sizes.empty()) throw std::invalid_argument("--K: empty cluster type");
    return ClusterType(sizes);
}

Multipartition parse_label(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error&) {
        throw std::invalid_argument("--label: not valid JSON");
    }
    if (!j.is_array()) throw std::invalid_argument("--label: expected a list of partitions");
    std::vector<Partition> comps;
    for (const auto& comp : j) {
        if (!comp.is_array()) throw std::invalid_argument("--label: each component is a list");
        std::vector<int> parts;
        for (const auto& part : comp) {
            if (!part.is_number_integer()) throw std::invalid_argument("--label: parts are integers");
            parts.push_back(part.get<int>());
        }
        comps.push_back(Partition(parts));
    }
    return Multipartition(comps);
}

std::string label_json(const Multipartition& label) {
    ordered_json j = ordered_json::array();
    for (const auto& comp : label.components) j.push_back(comp.parts());
    return j.dump();
}

int cmd_betti(const std::optional<std::string>& K_spec, std::optional<int> k, std::optional<int> n,
              int p, int q, std::optional<int> d, const std::string& format, const Caps& caps) {
    if (K_spec.has_value() == (k.has_value() || n.has_value()))
        throw std::invalid_argument("give either --K or both --k and --n");
    ClusterType K;
    if (K_spec) {
        K = parse_cluster_type(*K_spec);
    } else {
        if (!k || !n) throw std::invalid_argument("give either --K or both --k and --n");
        K = ClusterType::uniform(*k, *n);
    }

    DegreeProfile profile;
    if (d) {
        profile[*d] = betti(K, p, q, *d, caps.max_cells);
    } else {
        profile = poincare_table(K, p, q, caps.max_cells);
    }

    if (format == "json") {
        ordered_json j;
        j["schemaVersion"] = 1;
        j["K"] = K.sizes();
        j["p"] = p;
        j["q"] = q;
        ordered_json degrees = ordered_json::object();
        for (const auto& [deg, rank] : profile) degrees[std::to_string(deg)] = rank.str();
        j["ranks"] = degrees;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "degree,rank\n";
        for (const auto& [deg, rank] : profile) std::cout << deg << ',' << rank.str() << "\n";
    } else if (format == "tex") {
        std::cout << "\\begin{tabular}{rr}\n$d$ & $\\operatorname{rk} H^d$ \\\\\n\\hline\n";
        for (const auto& [deg, rank] : profile) std::cout << deg << " & " << rank.str() << " \\\\\n";
        std::cout << "\\end{tabular}\n";
    } else {
        for (const auto& [deg, rank] : profile) std::cout << deg << "\t" << rank.str() << "\n";
    }
    return kExitOk;
}

int cmd_classes(int k, int n, const std::string& format, const Caps& caps) {
    ClassTable table = conjugacy_classes(k, n, caps.max_group_order);
    if (format == "json") {
        ordered_json j;
        j["schemaVersion"] = 1;
        j["k"] = k;
        j["n"] = n;
        j["groupOrder"] = table.group_order.str();
        ordered_json classes = ordered_json::array();
        for (const auto& c : table.classes)
            classes.push_back({{"type", ordered_json::parse(c.type.to_json())},
                               {"size", c.size.str()},
                               {"centralizer", centralizer_order(c.type).str()}});
        j["classes"] = classes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << class_table_to_csv(table);
    }
    return kExitOk;
}

int cmd_irreps(int k, int n, const std::string& format, const Caps& caps) {
    BigInt order = wreath_group_order(k, n);
    bool with_characters = order <= caps.max_group_order;
    if (!with_characters)
        std::cerr << "note: group order exceeds the cap; listing labels and dimensions only\n";
    else if (order > 10000)
        std::cerr << "note: exhaustive character construction over " << order.str()
                  << " elements; this can take a while\n";
    auto labels = all_irrep_labels(k, n);
    std::shared_ptr<const CharacterTable> table;
    if (with_characters) table = character_table(k, n, caps.max_group_order);

    if (format == "json") {
        ordered_json j;
        j["schemaVersion"] = 1;
        j["k"] = k;
        j["n"] = n;
        j["characterValues"] = with_characters;
        if (with_characters) {
            ordered_json types = ordered_json::array();
            for (const auto& c : table->classes->classes)
                types.push_back(ordered_json::parse(c.type.to_json()));
            j["classTypes"] = types;
        }
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < labels.size(); ++i) {
            ordered_json row;
            row["label"] = ordered_json::parse(label_json(labels[i]));
            row["dimension"] = irrep_dimension(k, labels[i]).str();
            if (with_characters) {
                ordered_json values = ordered_json::array();
                for (const auto& v : table->characters[i].values()) values.push_back(v.str());
                row["values"] = values;
            }
            rows.push_back(row);
        }
        j["irreducibles"] = rows;
        std::cout << j.dump(2) << "\n";
    } else if (with_characters) {
        std::cout << character_table_to_csv(*table);
    } else {
        std::cout << "label,dimension\n";
        for (const auto& label : labels)
            std::cout << '"' << label.to_string() << "\"," << irrep_dimension(k, label).str()
                      << "\n";
    }
    return kExitOk;
}

int cmd_charpoly(int k, int d, const std::string& label_text, const Caps& caps) {
    Multipartition label = parse_label(label_text);
    validate_label(k, d, label);
    ClassFunction chi = irreducible_character(k, d, label, caps.max_group_order);
    std::cout << character_polynomial_mt(chi).to_json() << "\n";
    return kExitOk;
}

int cmd_decompose(int k, int d, const std::string& label_text, int n, const std::string& format) {
    Multipartition delta = parse_label(label_text);
    auto labels = pieri_labels(k, d, delta, n);
    if (format == "json") {
        ordered_json j;
        j["schemaVersion"] = 1;
        j["k"] = k;
        j["d"] = d;
        j["n"] = n;
        j["label"] = ordered_json::parse(label_json(delta));
        ordered_json rows = ordered_json::array();
        for (const auto& out : labels)
            rows.push_back({{"label", ordered_json::parse(label_json(out))},
                            {"multiplicity", 1},
                            {"dimension", irrep_dimension(k, out).str()}});
        j["constituents"] = rows;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "label,multiplicity,dimension\n";
        for (const auto& out : labels)
            std::cout << '"' << out.to_string() << "\",1," << irrep_dimension(k, out).str() << "\n";
    } else {
        for (const auto& out : labels)
            std::cout << out.to_string() << "\t1\t" << irrep_dimension(k, out).str() << "\n";
    }
    return kExitOk;
}

int cmd_stable(int k, int p, int q, int d, std::optional<int> window, int extrapolation,
               const std::string& format, const Caps& caps) {
    AnalysisOptions options;
    if (window) options.window = *window;
    options.extrapolation = extrapolation;
    options.max_cells = caps.max_cells;
    StabilityReport report = analyze(k, p, q, d, options);
    annotate_coefficients(report);
    annotate_unordered_onset(report);
    if (format == "csv") {
        std::cout << stability_report_to_csv(report);
    } else if (format == "tex") {
        std::cout << stability_report_to_tex(report);
    } else {
        std::cout << stability_report_to_json(report);
    }
    return report.all_pass() ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology ranks of vertical configuration spaces and the character "
                 "theory of wreath products S_k wr S_n"};
    app.require_subcommand(1);
    // cap flags live on the top-level app; subcommands inherit fallthrough
    // so the flags may also follow the command name
    app.fallthrough();

    Caps caps;
    try {
        caps.max_cells = static_cast<int>(env_or("WREATHSTAB_MAX_CELLS", kDefaultMaxCells));
        caps.max_group_order = env_or("WREATHSTAB_MAX_GROUP_ORDER", kDefaultMaxGroupOrder);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    app.add_option("--max-cells", caps.max_cells, "cell cap for table enumerations");
    app.add_option("--max-group-order", caps.max_group_order, "order cap for exhaustive group runs");
    app.add_flag("--force", caps.force, "allow caps above the safe defaults");

    std::optional<std::string> K_spec;
    std::optional<int> opt_k, opt_n, opt_d, opt_window;
    int p = 0, q = 2;
    std::string format = "plain";
    int extrapolation = 2;
    std::string label_text;

    auto add_format = [&format](CLI::App* cmd, const std::string& values) {
        cmd->add_option("--format", format, "output format: " + values)
            ->check(CLI::IsMember(std::vector<std::string>{"plain", "json", "csv", "tex"}));
    };

    CLI::App* betti_cmd = app.add_subcommand("betti", "cohomology ranks of one cluster type");
    betti_cmd->add_option("--K", K_spec, "explicit cluster type, e.g. 2,2,1");
    betti_cmd->add_option("--k", opt_k, "cluster size (with --n)");
    betti_cmd->add_option("--n", opt_n, "cluster count (with --k)");
    betti_cmd->add_option("--p", p, "rigid coordinates")->capture_default_str();
    betti_cmd->add_option("--q", q, "free coordinates")->capture_default_str();
    betti_cmd->add_option("--d", opt_d, "single degree (omit for the full table)");
    add_format(betti_cmd, "plain|json|csv|tex");

    CLI::App* classes_cmd = app.add_subcommand("classes", "conjugacy class table of S_k wr S_n");
    classes_cmd->add_option("--k", opt_k, "base group degree")->required();
    classes_cmd->add_option("--n", opt_n, "top group degree")->required();
    add_format(classes_cmd, "csv|json");

    CLI::App* irreps_cmd = app.add_subcommand("irreps", "irreducible characters of S_k wr S_n");
    irreps_cmd->add_option("--k", opt_k, "base group degree")->required();
    irreps_cmd->add_option("--n", opt_n, "top group degree")->required();
    add_format(irreps_cmd, "csv|json");

    CLI::App* charpoly_cmd =
        app.add_subcommand("charpoly", "character polynomial of an induced module generator");
    charpoly_cmd->add_option("--k", opt_k, "base group degree")->required();
    charpoly_cmd->add_option("--d", opt_d, "generator degree")->required();
    charpoly_cmd->add_option("--label", label_text, "generator label, e.g. [[1],[]]")->required();

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "constituents of an induced module in weight n");
    decompose_cmd->add_option("--k", opt_k, "base group degree")->required();
    decompose_cmd->add_option("--d", opt_d, "generator degree")->required();
    decompose_cmd->add_option("--label", label_text, "generator label, e.g. [[1],[]]")->required();
    decompose_cmd->add_option("--n", opt_n, "target weight")->required();
    add_format(decompose_cmd, "plain|json|csv");

    CLI::App* stable_cmd = app.add_subcommand("stable", "stability report for one degree");
    stable_cmd->add_option("--k", opt_k, "cluster size")->required();
    stable_cmd->add_option("--p", p, "rigid coordinates")->capture_default_str();
    stable_cmd->add_option("--q", q, "free coordinates (>= 2)")->capture_default_str();
    stable_cmd->add_option("--d", opt_d, "cohomological degree")->required();
    stable_cmd->add_option("--window", opt_window, "fit window (default: bound + 2)");
    stable_cmd->add_option("--extrapolation", extrapolation, "cross-validation points")
        ->capture_default_str();
    add_format(stable_cmd, "json|csv|tex");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the full verification suite");
    (void)selftest_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalid;
    }

    try {
        caps.validate();
        if (betti_cmd->parsed())
            return cmd_betti(K_spec, opt_k, opt_n, p, q, opt_d, format, caps);
        if (classes_cmd->parsed()) return cmd_classes(*opt_k, *opt_n, format, caps);
        if (irreps_cmd->parsed()) return cmd_irreps(*opt_k, *opt_n, format, caps);
        if (charpoly_cmd->parsed()) return cmd_charpoly(*opt_k, *opt_d, label_text, caps);
        if (decompose_cmd->parsed())
            return cmd_decompose(*opt_k, *opt_d, label_text, *opt_n, format);
        if (stable_cmd->parsed())
            return cmd_stable(*opt_k, p, q, *opt_d, opt_window, extrapolation, format, caps);
        if (selftest_cmd->parsed()) return run_selftest(std::cout) ? kExitOk : kExitInvalid;
        std::cerr << "error: no command\n";
        return kExitInvalid;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
