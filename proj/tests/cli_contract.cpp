// Checks the CLI contract: exit codes (0 ok, 1 invalid input, 2 cap
// exceeded), and that JSON outputs conform to the shipped schemas.
// argv[1] = CLI binary, argv[2] = schema directory.

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

namespace {

using json = nlohmann::json;

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n";
    }
}

struct CommandOutput {
    int exit_code = -1;
    std::string stdout_bytes;
};

CommandOutput run_command(const std::string& command) {
    CommandOutput out;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.stdout_bytes.append(buffer, got);
    int status = pclose(pipe);
    out.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return out;
}

// Minimal validator for the subset of JSON Schema the shipped schemas use:
// type, required, properties, items, additionalProperties, enum, const,
// pattern.
bool validate(const json& schema, const json& value, std::string path, std::string* error) {
    auto fail = [&](const std::string& why) {
        *error = path + ": " + why;
        return false;
    };
    if (schema.contains("const") && value != schema["const"]) return fail("const mismatch");
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& option : schema["enum"]) found = found || option == value;
        if (!found) return fail("not in enum");
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        if (type == "object" && !value.is_object()) return fail("expected object");
        if (type == "array" && !value.is_array()) return fail("expected array");
        if (type == "string" && !value.is_string()) return fail("expected string");
        if (type == "integer" && !value.is_number_integer()) return fail("expected integer");
        if (type == "boolean" && !value.is_boolean()) return fail("expected boolean");
    }
    if (schema.contains("pattern") && value.is_string()) {
        if (!std::regex_match(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
            return fail("pattern mismatch");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key " + key.get<std::string>());
        for (auto it = value.begin(); it != value.end(); ++it) {
            const json* sub = nullptr;
            if (schema.contains("properties") && schema["properties"].contains(it.key()))
                sub = &schema["properties"][it.key()];
            else if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object())
                sub = &schema["additionalProperties"];
            if (sub && !validate(*sub, it.value(), path + "." + it.key(), error)) return false;
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (size_t i = 0; i < value.size(); ++i)
            if (!validate(schema["items"], value[i], path + "[" + std::to_string(i) + "]", error))
                return false;
    }
    return true;
}

void check_schema(const std::string& cli, const std::string& schema_dir,
                  const std::string& command, const std::string& schema_file) {
    CommandOutput out = run_command(cli + " " + command);
    expect(out.exit_code == 0, command + ": exit code " + std::to_string(out.exit_code));
    if (out.exit_code != 0) return;
    json value;
    try {
        value = json::parse(out.stdout_bytes);
    } catch (const json::parse_error&) {
        expect(false, command + ": output is not JSON");
        return;
    }
    std::ifstream in(schema_dir + "/" + schema_file);
    expect(in.good(), schema_file + ": schema file missing");
    if (!in.good()) return;
    json schema = json::parse(in);
    std::string error;
    expect(validate(schema, value, "$", &error), command + ": schema violation at " + error);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_contract <path-to-cli> <schema-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string schemas = argv[2];

    check_schema(cli, schemas, "betti --k 1 --n 3 --p 0 --q 2 --format json", "betti.schema.json");
    check_schema(cli, schemas, "classes --k 2 --n 2 --format json", "classes.schema.json");
    check_schema(cli, schemas, "irreps --k 2 --n 2 --format json", "irreps.schema.json");
    check_schema(cli, schemas, "irreps --k 2 --n 6 --max-group-order 100 --format json",
                 "irreps.schema.json");
    check_schema(cli, schemas, "charpoly --k 2 --d 1 --label '[[1],[]]'",
                 "character_polynomial.schema.json");
    check_schema(cli, schemas, "decompose --k 2 --d 1 --label '[[1],[]]' --n 3 --format json",
                 "decompose.schema.json");
    check_schema(cli, schemas, "stable --k 1 --p 0 --q 2 --d 1", "stability_report.schema.json");
    check_schema(cli, schemas, "stable --k 2 --p 0 --q 3 --d 2 --format json",
                 "stability_report.schema.json");

    // exit-code contract
    expect(run_command(cli + " betti --K banana --p 0 --q 2").exit_code == 1,
           "malformed K must exit 1");
    expect(run_command(cli + " betti --K 2,2,2,2,2,2,2 --p 0 --q 2").exit_code == 2,
           "cap overflow must exit 2");
    expect(run_command(cli + " betti --K 2,2,2,2,2,2,2 --p 0 --q 2 --max-cells 14 --force --d 0")
                   .exit_code == 0,
           "forced cap raise must succeed");
    expect(run_command(cli + " betti --K 2,2 --p 0 --q 2 --max-cells 20").exit_code == 1,
           "raising a cap without --force must exit 1");
    expect(run_command(cli + " classes --k 3 --n 9").exit_code == 2,
           "group order overflow must exit 2");
    expect(run_command(cli + " betti --K 2 --k 1 --n 2 --p 0 --q 2").exit_code == 1,
           "K and (k,n) are mutually exclusive");
    expect(run_command(cli + " decompose --k 2 --d 1 --label '[[1],[2]]' --n 3").exit_code == 1,
           "label of the wrong total must exit 1");
    expect(run_command(cli + " nonsense").exit_code == 1, "unknown command must exit 1");
    expect(run_command("WREATHSTAB_MAX_CELLS=4 " + cli + " betti --K 2,2,2 --p 0 --q 2")
                   .exit_code == 2,
           "environment cell cap must apply");
    expect(run_command("WREATHSTAB_MAX_GROUP_ORDER=5 " + cli + " classes --k 2 --n 2")
                   .exit_code == 2,
           "environment group-order cap must apply");

    if (failures == 0) std::cout << "cli_contract: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
