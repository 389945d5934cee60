#include "riesz/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace riesz {

JsonValue& JsonValue::set(const std::string& key, JsonValue value) {
    std::get<Object>(data_).members.emplace_back(key, std::move(value));
    return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
    std::get<Array>(data_).items.push_back(std::move(value));
    return *this;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    out += '"';
}

}  // namespace

void JsonValue::dump_to(std::string& out, int indent, int depth) const {
    auto newline = [&](int d) {
        if (indent > 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent) * d, ' ');
        }
    };
    if (std::holds_alternative<std::nullptr_t>(data_)) {
        out += "null";
    } else if (auto* d = std::get_if<double>(&data_)) {
        out += format_double(*d);
    } else if (auto* i = std::get_if<long long>(&data_)) {
        out += std::to_string(*i);
    } else if (auto* b = std::get_if<bool>(&data_)) {
        out += *b ? "true" : "false";
    } else if (auto* s = std::get_if<std::string>(&data_)) {
        append_escaped(out, *s);
    } else if (auto* obj = std::get_if<Object>(&data_)) {
        out += '{';
        for (size_t k = 0; k < obj->members.size(); ++k) {
            if (k) out += ',';
            newline(depth + 1);
            append_escaped(out, obj->members[k].first);
            out += indent > 0 ? ": " : ":";
            obj->members[k].second.dump_to(out, indent, depth + 1);
        }
        if (!obj->members.empty()) newline(depth);
        out += '}';
    } else if (auto* arr = std::get_if<Array>(&data_)) {
        out += '[';
        for (size_t k = 0; k < arr->items.size(); ++k) {
            if (k) out += ',';
            if (indent > 0 && k) out += ' ';
            arr->items[k].dump_to(out, indent, depth + 1);
        }
        out += ']';
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    return out;
}

JsonValue to_json(const Vec& v) {
    JsonValue arr = JsonValue::array();
    for (int i = 0; i < v.dim(); ++i) arr.push(v[i]);
    return arr;
}

JsonValue to_json(const LemmaReport& report) {
    JsonValue out = JsonValue::object();
    out.set("lemma_id", report.lemma_id);
    JsonValue params = JsonValue::object();
    for (const auto& [k, v] : report.params) params.set(k, v);
    out.set("params", std::move(params));
    JsonValue cases = JsonValue::array();
    for (const auto& c : report.cases) {
        JsonValue jc = JsonValue::object();
        jc.set("name", c.name);
        JsonValue cp = JsonValue::object();
        for (const auto& [k, v] : c.params) cp.set(k, v);
        jc.set("params", std::move(cp));
        jc.set("value", c.value);
        jc.set("error", c.error);
        jc.set("verdict", to_string(c.verdict));
        cases.push(std::move(jc));
    }
    out.set("cases", std::move(cases));
    out.set("worst_margin", report.worst_margin);
    out.set("overall", to_string(report.overall()));
    return out;
}

BodySpec parse_body_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("body spec: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("body spec: top level must be an object");
    static const std::set<std::string> allowed = {"dimension", "core_vertices", "delta",
                                                 "base_point"};
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            throw std::invalid_argument("body spec: unknown key \"" + key + "\"");
    for (const char* req : {"dimension", "core_vertices", "delta"})
        if (!j.contains(req))
            throw std::invalid_argument(std::string("body spec: missing key \"") + req + "\"");

    BodySpec spec;
    spec.dimension = j.at("dimension").get<int>();
    spec.delta = j.at("delta").get<double>();
    for (const auto& row : j.at("core_vertices")) {
        Vec v(spec.dimension);
        if (static_cast<int>(row.size()) != spec.dimension)
            throw std::invalid_argument("body spec: vertex length != dimension");
        for (int i = 0; i < spec.dimension; ++i) v[i] = row.at(i).get<double>();
        spec.core_vertices.push_back(v);
    }
    if (j.contains("base_point")) {
        const auto& row = j.at("base_point");
        if (static_cast<int>(row.size()) != spec.dimension)
            throw std::invalid_argument("body spec: base_point length != dimension");
        Vec v(spec.dimension);
        for (int i = 0; i < spec.dimension; ++i) v[i] = row.at(i).get<double>();
        spec.base_point = v;
    }
    return spec;
}

BodySpec load_body_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_body_spec(ss.str());
}

}  // namespace riesz
