#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "ybe/catalog_io.hpp"

using namespace ybe;
using nlohmann::json;

TEST_CASE("solution json round trip") {
    for (const Solution& s : {irretractable5(), twoblock4(), level3_4pt()}) {
        auto j = solution_to_json(s);
        CHECK(solution_from_json(json::parse(j.dump())) == s);
    }
}

TEST_CASE("data files match the in-code fixtures") {
    CHECK(load_solution_file(data_path("twoblock4.json")) == twoblock4());
    CHECK(load_solution_file(data_path("level3_4pt.json")) == level3_4pt());
    CHECK(load_solution_file(data_path("irretractable5.json")) == irretractable5());
    CHECK_THROWS(load_solution_file(data_path("no_such_file.json")));
}

TEST_CASE("malformed solution json is rejected") {
    CHECK_THROWS_AS(solution_from_json(json::parse(R"({"n":2,"sigma":[[0,1]],"tau":[[0,1],[0,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(solution_from_json(json::parse(R"({"n":2,"sigma":[[0,0],[0,1]],"tau":[[0,1],[0,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(solution_from_json(json::parse(R"({"sigma":[[0]],"tau":[[0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(solution_from_json(json::parse(R"({"n":1,"sigma":[["x"]],"tau":[[0]]})")),
                    std::invalid_argument);
}

TEST_CASE("classification report serialization") {
    ClassificationReport r = classify_solution(twoblock4());
    auto j = report_to_json(r);
    CHECK(j.at("braid") == true);
    CHECK(j.at("involutive") == true);
    CHECK(j.at("mpl") == 2);

    ClassificationReport ri = classify_solution(irretractable5());
    auto ji = report_to_json(ri);
    CHECK(ji.at("mpl").is_null());
    CHECK(ji.at("irretractable") == true);

    // key order is fixed for byte-stable output
    std::string dumped = j.dump();
    CHECK(dumped.find("\"braid\"") < dumped.find("\"involutive\""));
    CHECK(dumped.find("\"involutive\"") < dumped.find("\"mpl\""));
}

TEST_CASE("catalog jsonl round trip is byte-stable") {
    Catalog cat = enumerate_2permutational(3, false);
    compute_flags(cat, 2);
    std::string text = catalog_to_jsonl(cat);
    CHECK(text == catalog_to_jsonl(cat)); // deterministic re-dump

    Catalog again = enumerate_2permutational(3, false);
    compute_flags(again);
    CHECK(text == catalog_to_jsonl(again)); // deterministic re-enumeration

    std::istringstream in(text);
    Catalog back = catalog_from_jsonl(in);
    CHECK(back.n == cat.n);
    CHECK(back.cls == cat.cls);
    REQUIRE(back.count() == cat.count());
    for (int i = 0; i < cat.count(); ++i) {
        CHECK(back.entries[i].sol == cat.entries[i].sol);
        CHECK(back.entries[i].base_index == cat.entries[i].base_index);
        CHECK(back.entries[i].pi1 == cat.entries[i].pi1);
        CHECK(back.entries[i].pi2 == cat.entries[i].pi2);
        REQUIRE(back.entries[i].flags.has_value());
        CHECK(report_to_json(*back.entries[i].flags).dump() ==
              report_to_json(*cat.entries[i].flags).dump());
    }
}

TEST_CASE("corrupted catalog headers are rejected") {
    std::istringstream bad_schema(R"({"schema":2,"n":1,"class":"perm","count":0})"
                                  "\n");
    CHECK_THROWS_AS(catalog_from_jsonl(bad_schema), std::invalid_argument);

    std::istringstream bad_count(
        R"({"schema":1,"n":1,"class":"perm","count":2})"
        "\n"
        R"({"solution":{"n":1,"sigma":[[0]],"tau":[[0]]},"flags":{"braid":true,"involutive":true,"square_free":true,"lri":true,"left_distributive":true,"right_distributive":true,"two_reductive":true,"two_permutational":true,"irretractable":false,"mpl":0,"dis_abelian":true},"provenance":{"base_index":null,"pi1":"id","pi2":"id"}})"
        "\n");
    CHECK_THROWS_AS(catalog_from_jsonl(bad_count), std::invalid_argument);
}
