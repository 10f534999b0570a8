#pragma once

// Shared helpers for the test binaries: subprocess capture around the CLI
// and a small validator for the subset of JSON Schema the schemas/ files use
// (type, required, properties, items, enum).

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace testsupport {

using Json = nlohmann::json;

struct CliResult {
    int exit_code;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(ADDSYS_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline Json load_schema(const std::string& name) {
    return Json::parse(read_file(std::string(ADDSYS_SCHEMA_DIR) + "/" + name));
}

inline bool type_matches(const Json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    throw std::runtime_error("unknown schema type: " + type);
}

// Returns an empty string on success, else a description of the first
// violation found.
inline std::string schema_check(const Json& value, const Json& schema,
                                const std::string& path = "$") {
    if (schema.contains("enum")) {
        for (const auto& candidate : schema["enum"]) {
            if (value == candidate) return "";
        }
        return path + ": not in enum " + schema["enum"].dump();
    }
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_array()) {
            for (const auto& alt : t) ok = ok || type_matches(value, alt);
        } else {
            ok = type_matches(value, t.get<std::string>());
        }
        if (!ok) return path + ": expected type " + t.dump() + ", got " + value.dump();
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!value.is_object() || !value.contains(key.get<std::string>())) {
                return path + ": missing required key " + key.dump();
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key)) {
                std::string err = schema_check(value[key], sub, path + "." + key);
                if (!err.empty()) return err;
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            std::string err =
                schema_check(value[i], schema["items"], path + "[" + std::to_string(i) + "]");
            if (!err.empty()) return err;
        }
    }
    return "";
}

inline std::string data_path(const std::string& name) {
    return std::string(ADDSYS_DATA_DIR) + "/" + name;
}

}  // namespace testsupport
