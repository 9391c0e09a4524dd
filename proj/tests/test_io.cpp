#include <doctest.h>

#include <string>

#include <json.hpp>

#include "rootposet/io.hpp"

using namespace rootposet;

TEST_CASE("document round trips are byte identical") {
    for (const char* token : {"G2", "B3", "D5", "E6"}) {
        RootPoset rp = build_poset(parse_diagram(token));
        std::string first = export_json(rp);
        RootPoset back = import_json(first);
        CHECK(export_json(back) == first);
        CHECK(export_json(rp) == first); // export itself is deterministic
    }
}

TEST_CASE("the document carries the full schema") {
    RootPoset g2 = build_poset(dynkin(Family::G, 2));
    auto doc = nlohmann::json::parse(export_json(g2));
    CHECK(doc["diagram"] == "G2");
    REQUIRE(doc["elements"].size() == 6);
    CHECK(doc["elements"][0]["id"] == 0);
    CHECK(doc["elements"][0]["coeffs"].size() == 2);
    CHECK(doc["elements"][0]["height"] == 1);
    REQUIRE(doc["covers"].size() == 5);
    for (const auto& edge : doc["covers"]) {
        CHECK(edge.contains("lo"));
        CHECK(edge.contains("hi"));
        bool named = edge["simple"] == "a" || edge["simple"] == "b";
        CHECK(named);
    }
    CHECK(doc["levels"]["g"] == 6);
    CHECK(doc["levels"]["h"] == 5);
    CHECK(doc["levels"]["r"].size() == 6);
}

TEST_CASE("imports reject any tampered field") {
    RootPoset b3 = build_poset(dynkin(Family::B, 3));
    std::string text = export_json(b3);

    auto tampered = [&](void (*mutate)(nlohmann::ordered_json&)) {
        auto doc = nlohmann::ordered_json::parse(text);
        mutate(doc);
        return doc.dump(2) + "\n";
    };

    CHECK_THROWS_AS(import_json(tampered([](nlohmann::ordered_json& d) {
                        d["elements"][0]["height"] = 2;
                    })),
                    VerificationFailure);
    CHECK_THROWS_AS(import_json(tampered([](nlohmann::ordered_json& d) {
                        d["elements"][3]["coeffs"][0] = 5;
                    })),
                    VerificationFailure);
    CHECK_THROWS_AS(import_json(tampered([](nlohmann::ordered_json& d) {
                        d["covers"][0]["simple"] = "u";
                    })),
                    VerificationFailure);
    CHECK_THROWS_AS(import_json(tampered([](nlohmann::ordered_json& d) {
                        d["covers"].erase(0);
                    })),
                    VerificationFailure);
    CHECK_THROWS_AS(import_json(tampered([](nlohmann::ordered_json& d) {
                        d["levels"]["h"] = 2;
                    })),
                    VerificationFailure);
    CHECK_THROWS_AS(import_json(tampered([](nlohmann::ordered_json& d) {
                        d["elements"].erase(0);
                    })),
                    VerificationFailure);

    CHECK_THROWS_AS(import_json("{"), VerificationFailure);
    CHECK_THROWS_AS(import_json("{}"), VerificationFailure);
    CHECK_THROWS_AS(import_json(R"({"diagram":"Z9"})"), UnsupportedDiagram);
}

TEST_CASE("graph renderings are deterministic and well formed") {
    RootPoset a3 = build_poset(dynkin(Family::A, 3));

    std::string dot = export_dot(a3);
    CHECK(dot == export_dot(a3));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("(1,1,0)") != std::string::npos);

    std::string tikz = export_tikz(a3);
    CHECK(tikz == export_tikz(a3));
    CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(tikz.find("\\node") != std::string::npos);
    CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
}
