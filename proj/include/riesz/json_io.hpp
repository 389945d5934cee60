#pragma once

#include <string>
#include <variant>
#include <vector>

#include "riesz/geometry.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// Ordered JSON value for CLI output. Numbers are serialized with 17
/// significant digits so repeated runs are byte-identical and round-trip
/// losslessly.
class JsonValue {
public:
    JsonValue() : data_(nullptr) {}
    JsonValue(double x) : data_(x) {}
    JsonValue(int x) : data_(static_cast<long long>(x)) {}
    JsonValue(long long x) : data_(x) {}
    JsonValue(bool b) : data_(b) {}
    JsonValue(const char* s) : data_(std::string(s)) {}
    JsonValue(std::string s) : data_(std::move(s)) {}

    static JsonValue object() {
        JsonValue v;
        v.data_ = Object{};
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.data_ = Array{};
        return v;
    }

    JsonValue& set(const std::string& key, JsonValue value);
    JsonValue& push(JsonValue value);

    std::string dump(int indent = 0) const;

private:
    struct Object {
        std::vector<std::pair<std::string, JsonValue>> members;
    };
    struct Array {
        std::vector<JsonValue> items;
    };
    std::variant<std::nullptr_t, double, long long, bool, std::string, Object, Array> data_;

    void dump_to(std::string& out, int indent, int depth) const;
};

std::string format_double(double x);

JsonValue to_json(const Vec& v);
JsonValue to_json(const LemmaReport& report);

/// Parses a body spec from JSON text. Strict schema: the keys "dimension",
/// "core_vertices", "delta" are required, "base_point" optional; anything
/// else is rejected. Throws std::invalid_argument with a line/column message
/// on malformed input.
BodySpec parse_body_spec(const std::string& json_text);
BodySpec load_body_spec(const std::string& path);

}  // namespace riesz
