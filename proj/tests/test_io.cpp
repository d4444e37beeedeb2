#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superfat/io.hpp"

using namespace superfat;

TEST_CASE("scheme spec parsing") {
    const PrimeField f;
    ScalarStream s(f, 0);
    const SchemeUnion one = parse_scheme_spec(R"([{"kind": "square", "point": [0,0,1], "frame": [[1,0,0],[0,1,0]]}])", s);
    REQUIRE(one.size() == 1);
    CHECK(one.components()[0].kind() == Kind::TwoSquare);
    CHECK(ideal_dim(f, one, 2) == 2);

    const SchemeUnion mixed = parse_scheme_spec(R"({"components": [
        {"kind": "square", "random": true},
        {"kind": "fat", "m": 3, "random": true},
        {"kind": "simple", "point": [1,2,3]},
        {"kind": "jet", "point": [1,1,1], "frame": [[1,-1,0],[0,1,-1]]},
        {"kind": "collision", "point": [0,1,0]}
    ]})", s);
    CHECK(mixed.size() == 5);
    CHECK(mixed.length() == 4 + 6 + 1 + 2 + 8);

    ScalarStream t(f, 1);
    const SchemeUnion cubic = parse_scheme_spec(R"([{"kind":"square","random":true},{"kind":"fat","m":3,"random":true}])", t);
    CHECK(ideal_dim(f, cubic, 3) == 1);

    std::string seven = "[";
    for (int i = 0; i < 7; ++i) seven += std::string(i ? "," : "") + R"({"kind":"square","random":true})";
    seven += "]";
    CHECK(ideal_dim(f, parse_scheme_spec(seven, t), 6) == 0);
}

TEST_CASE("scheme spec errors") {
    const PrimeField f;
    ScalarStream s(f, 0);
    CHECK_THROWS_AS(parse_scheme_spec("[{", s), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec("{\"x\": 1}", s), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind": "blob", "point": [0,0,1]}])", s), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind": "fat", "point": [0,0,1]}])", s), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind": "simple", "point": [0,0]}])", s), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind": "simple"}])", s), ParseError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind":"simple","point":[1,2,3]},{"kind":"square","point":[2,4,6]}])", s),
                    SchemeError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind":"square","point":[0,0,1],"frame":[[1,0,1],[0,1,0]]}])", s),
                    SchemeError);
    CHECK_THROWS_AS(parse_scheme_spec(R"([{"kind":"simple","point":[0,0,0]}])", s), SchemeError);
}

TEST_CASE("certificate tables") {
    const PrimeField f;
    const RunHeader h{{f.modulus()}, 0, 3};
    const auto rows = sweep({f}, 3, SweepMode::Critical, Extras{}, 3, 0);
    const std::string csv = certificates_csv(h, rows);
    CHECK(csv.rfind("# prime=2147483647 seed=0 trials=3\nd,s,extra_length,expected,computed,status,seed,prime,trials\n", 0) == 0);
    CHECK(csv.find("\n1,1,0,0,0,CERTIFIED,0,2147483647,1\n") != std::string::npos);

    const auto doc = nlohmann::json::parse(certificates_json(h, rows));
    CHECK(doc["header"]["prime"] == 2147483647u);
    CHECK(doc["certificates"].size() == rows.size());
    CHECK(doc["certificates"][0]["status"] == "CERTIFIED");
    // sorted keys: "computed" precedes "d"
    const std::string text = certificates_json(h, rows);
    CHECK(text.find("\"computed\"") < text.find("\"d\""));
    CHECK(certificates_json(h, rows) == text);
}

TEST_CASE("report serialization") {
    const PrimeField f;
    const auto rep = nlohmann::json(to_json(replay_pari(f, 6, 0, 0)));
    CHECK(rep["lemma"] == "pari");
    CHECK(rep["pass"] == true);
    REQUIRE(rep["steps"].size() == 4);
    CHECK(rep["steps"][0]["trace_degree"] == 7);
    CHECK(rep["steps"][3]["length_after"] == 2);

    const auto p = to_json(verify_double_points(f, 3, 4, 5, 0));
    CHECK(p["dim"] == 3);
    CHECK(p["drop_checks"]["tangent_drop"] == true);
    CHECK(p["counts"][0]["SymmetricNode"] == 5);

    CHECK(step_table(replay_dispari(f, 5, 2, 0)).find("PASS") != std::string::npos);
}
