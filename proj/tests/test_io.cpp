#include <doctest.h>

#include "mcube/io.hpp"

using namespace mcube;

TEST_SUITE("io") {
    TEST_CASE("table json shape") {
        FilteredModel fm = filter_model(lookup("KT"), closure({parse("[]p")}));
        nlohmann::json j = table_json(fm.model);
        CHECK(j["closure"] == nlohmann::json::array({"p", "[]p"}));
        CHECK(j["rows"].size() == fm.model.rows.size());
        CHECK(j["rows"][0] == nlohmann::json::array({"F", "F"}));
        CHECK(j["relation"].size() == fm.model.relation.edge_count());
        CHECK(j["relation"][0].size() == 2);
    }

    TEST_CASE("table csv") {
        FilteredModel fm = filter_model(lookup("KT"), closure({parse("[]p")}));
        std::string csv = table_csv(fm.model.closure, fm.model.rows);
        CHECK(csv.rfind("p,[]p\nF,F\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') ==
              static_cast<long>(fm.model.rows.size() + 1));
    }

    TEST_CASE("nmatrix dump") {
        nlohmann::json j = nmatrix_json(nmatrix(lookup("KT")));
        CHECK(j["implication"]["t"]["f"] == nlohmann::json::array({"f"}));
        CHECK(j["box"]["T"] == nlohmann::json::array({"t", "T"}));
        CHECK(j["bot"] == nlohmann::json::array({"F"}));
        std::string csv = nmatrix_csv(nmatrix(lookup("K")));
        CHECK(csv.find("t,f,f fff,fff,fff,t,T,t T,T") != std::string::npos);
    }

    TEST_CASE("kripke outputs") {
        KripkeModel k;
        k.world_count = 2;
        k.relation = Relation(2, {{0, 1}});
        k.valuation["p"] = {false, true};
        nlohmann::json j = kripke_json(k);
        CHECK(j["worlds"] == 2);
        CHECK(j["relation"] == nlohmann::json::parse("[[0,1]]"));
        CHECK(j["valuation"]["p"] == nlohmann::json::parse("[false,true]"));
        std::string dot = kripke_dot(k, 0);
        CHECK(dot.find("w0 -> w1;") != std::string::npos);
        CHECK(dot.find("label=\"w1: p\"") != std::string::npos);
        CHECK(dot.find("peripheries=2") != std::string::npos);
    }

    TEST_CASE("axioms json") {
        nlohmann::json j = axioms_json(lookup("KD45"));
        REQUIRE(j.size() == 4);
        CHECK(j[0]["label"] == "k");
        CHECK(j[0]["schema"] == "[](A -> B) -> []A -> []B");
        CHECK(j[3]["schema"] == "<>A -> []<>A");
    }

    TEST_CASE("level trace csv") {
        LevelTrace t = level_filter_demo(lookup("KT"), closure({parse("[](p -> p)")}), 1);
        std::string csv = level_trace_csv(t);
        CHECK(csv.rfind("level,p,p -> p,[](p -> p)\n", 0) == 0);
    }
}
