#include <doctest.h>

#include <string>

#include "riesz/json_io.hpp"

using namespace riesz;

TEST_CASE("parse_body_spec accepts the full schema") {
    BodySpec s = parse_body_spec(R"({
        "dimension": 2,
        "core_vertices": [[0.0, 0.0], [1.0, 0.5]],
        "delta": 0.25,
        "base_point": [0.5, 0.25]
    })");
    CHECK(s.dimension == 2);
    CHECK(s.core_vertices.size() == 2);
    CHECK(s.core_vertices[1][1] == 0.5);
    CHECK(s.delta == 0.25);
    REQUIRE(s.base_point.has_value());
    CHECK((*s.base_point)[0] == 0.5);
}

TEST_CASE("parse_body_spec rejects bad input with a clear message") {
    CHECK_THROWS_AS(parse_body_spec("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_body_spec("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_body_spec(R"({"dimension":2,"core_vertices":[[0,0]],"delta":1,"zzz":1})"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_body_spec(R"({"dimension":2,"delta":1})"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_body_spec(R"({"dimension":3,"core_vertices":[[0,0]],"delta":1})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_body_spec(R"({"dimension":2,"core_vertices":[[0,0]],"delta":1,"base_point":[0]})"),
        std::invalid_argument);

    try {
        parse_body_spec("{\"dimension\": }");
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("parse") != std::string::npos);
    }
}

TEST_CASE("JsonValue serializes deterministically with 17 digits") {
    JsonValue obj = JsonValue::object();
    obj.set("x", 0.1);
    obj.set("n", 42);
    obj.set("flag", true);
    obj.set("name", "a\"b");
    JsonValue arr = JsonValue::array();
    arr.push(1.0 / 3.0);
    arr.push(JsonValue());
    obj.set("items", std::move(arr));

    std::string a = obj.dump();
    CHECK(a == obj.dump());  // byte-identical
    CHECK(a.find("0.10000000000000001") != std::string::npos);
    CHECK(a.find("0.33333333333333331") != std::string::npos);
    CHECK(a.find("\"a\\\"b\"") != std::string::npos);
    CHECK(a.find("null") != std::string::npos);

    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
}

TEST_CASE("to_json of vectors and reports") {
    CHECK(to_json(Vec{1.0, -0.5}).dump() == "[1,-0.5]");

    LemmaReport r;
    r.lemma_id = "demo";
    r.worst_margin = 0.5;
    CaseResult c;
    c.name = "case0";
    c.value = -1.0;
    c.error = 0.01;
    c.verdict = Verdict::Pass;
    r.cases.push_back(c);
    std::string s = to_json(r).dump();
    CHECK(s.find("\"lemma_id\":\"demo\"") != std::string::npos);
    CHECK(s.find("\"overall\":\"pass\"") != std::string::npos);
}
