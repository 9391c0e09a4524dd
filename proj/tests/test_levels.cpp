#include <doctest.h>

#include <vector>

#include "rootposet/level_tables.hpp"
#include "rootposet/root_poset.hpp"

using namespace rootposet;

namespace {

std::vector<int> profile_of(const char* token) {
    return build_poset(parse_diagram(token)).level_profile().r;
}

} // namespace

TEST_CASE("height profiles are the frozen ones") {
    CHECK(profile_of("A5") == std::vector<int>{5, 4, 3, 2, 1, 0});
    CHECK(profile_of("B5") == std::vector<int>{5, 4, 4, 3, 3, 2, 2, 1, 1, 0});
    CHECK(profile_of("C5") == std::vector<int>{5, 4, 4, 3, 3, 2, 2, 1, 1, 0});
    CHECK(profile_of("D6") == std::vector<int>{6, 5, 5, 4, 4, 2, 2, 1, 1, 0});
    CHECK(profile_of("E6") == std::vector<int>{6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1, 0});
    CHECK(profile_of("E7") ==
          std::vector<int>{7, 6, 6, 6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1, 1, 1, 0});
    CHECK(profile_of("E8") ==
          std::vector<int>{8, 7, 7, 7, 7, 7, 7, 6, 6, 6, 6, 5, 5, 4, 4,
                           4, 4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 0});
    CHECK(profile_of("F4") == std::vector<int>{4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1, 0});
    CHECK(profile_of("G2") == std::vector<int>{2, 1, 1, 1, 1, 0});
}

TEST_CASE("profile identities hold everywhere and h is read off the profile") {
    struct Row {
        const char* token;
        int g, h;
    };
    const Row rows[] = {{"A6", 7, 2},  {"B6", 12, 3}, {"C7", 14, 3}, {"D7", 12, 3},
                        {"E6", 12, 4}, {"E7", 18, 5}, {"E8", 30, 7}, {"F4", 12, 5},
                        {"G2", 6, 5},  {"A2", 3, 2},  {"B2", 4, 3}};
    for (const auto& row : rows) {
        RootPoset rp = build_poset(parse_diagram(row.token));
        LevelProfile lp = rp.level_profile();
        const int n = rp.diagram().rank;
        CHECK(lp.g == row.g);
        CHECK(lp.h == row.h);
        CHECK(lp.at(1) == n);
        CHECK(lp.at(lp.g) == 0);
        for (int i = 1; i <= lp.g; ++i) {
            CHECK(lp.at(i) + lp.at(lp.g - i + 1) == n);
            CHECK(int(rp.level_set(i).count()) == lp.at(i));
        }
        // h really is the last level of size n-1
        CHECK(lp.at(lp.h) == n - 1);
        for (int i = lp.h + 1; i <= lp.g; ++i) CHECK(lp.at(i) != n - 1);
    }
}

TEST_CASE("tables exist exactly for the forked and F families") {
    CHECK(has_published_table(dynkin(Family::D, 4)));
    CHECK(has_published_table(dynkin(Family::D, 9)));
    CHECK(has_published_table(dynkin(Family::E, 6)));
    CHECK(has_published_table(dynkin(Family::F, 4)));
    CHECK_FALSE(has_published_table(dynkin(Family::A, 5)));
    CHECK_FALSE(has_published_table(dynkin(Family::B, 5)));
    CHECK_FALSE(has_published_table(dynkin(Family::G, 2)));
    CHECK_THROWS_AS(published_table(dynkin(Family::A, 5)), UnsupportedDiagram);
}

TEST_CASE("level decompositions partition the poset with the recorded sizes") {
    struct Row {
        const char* token;
        std::vector<long> sizes;
        std::size_t warning_count;
    };
    const Row rows[] = {
        {"D4", {6, 6}, 0},
        {"D5", {10, 10}, 0},
        {"D6", {15, 15}, 0},
        {"D7", {21, 21}, 0},
        {"D8", {28, 28}, 0},
        {"E6", {15, 10, 11}, 1},
        {"E7", {21, 13, 9, 20}, 0},
        {"E8", {28, 16, 12, 15, 15, 34}, 2},
        {"F4", {10, 14}, 0},
    };
    for (const auto& row : rows) {
        RootPoset rp = build_poset(parse_diagram(row.token));
        LevelDecomposition dec = verify_level_table(rp);
        REQUIRE(dec.levels.size() == row.sizes.size());
        for (std::size_t k = 0; k < row.sizes.size(); ++k)
            CHECK(long(dec.levels[k].count()) == row.sizes[k]);
        CHECK(dec.warnings.size() == row.warning_count);

        long covered = 0;
        for (const auto& lev : dec.levels) covered += lev.count();
        CHECK(covered == long(rp.size()));
        for (int e = 0; e < rp.size(); ++e) {
            int k = dec.level_of(e);
            REQUIRE(k >= 1);
            CHECK(dec.levels[std::size_t(k - 1)].test(e));
        }
    }
}

TEST_CASE("the three published slips are flagged with their corrections") {
    {
        auto dec = verify_level_table(build_poset(dynkin(Family::E, 6)));
        REQUIRE(dec.warnings.size() == 1);
        const LevelWarning& w = dec.warnings[0];
        CHECK(w.level == 3);
        CHECK(w.field == "maximum");
        CHECK(w.published == "(1 2 3 2 1 | u = 1)");
        CHECK(w.corrected == "(1 2 3 2 1 | u = 2)");
    }
    {
        auto dec = verify_level_table(build_poset(dynkin(Family::E, 8)));
        REQUIRE(dec.warnings.size() == 2);
        CHECK(dec.warnings[0].level == 5);
        CHECK(dec.warnings[0].field == "condition");
        CHECK(dec.warnings[0].published == "d = 2, e = 3");
        CHECK(dec.warnings[0].corrected == "d = 2, e = 2");
        CHECK(dec.warnings[1].level == 6);
        CHECK(dec.warnings[1].field == "maximum");
        CHECK(dec.warnings[1].published == "(2 4 6 5 4 3 12 | u = 3)");
        CHECK(dec.warnings[1].corrected == "(2 4 6 5 4 3 2 | u = 3)");
    }
}

TEST_CASE("each level has a unique top and the recorded minima") {
    RootPoset rp = build_poset(dynkin(Family::E, 7));
    auto dec = verify_level_table(rp);
    PublishedTable tab = published_table(rp.diagram());
    const Poset& p = rp.order();
    for (std::size_t k = 0; k < dec.levels.size(); ++k) {
        CHECK(p.maximal_elements(dec.levels[k]).count() == 1);
        const auto& pl = tab.levels[k];
        if (pl.minima_kind == MinimaKind::Explicit) {
            IndexSet mins = p.minimal_elements(dec.levels[k]);
            CHECK(std::size_t(mins.count()) == pl.minima.size());
            for (const auto& v : pl.minima) CHECK(mins.test(rp.index_of(Root{v})));
        }
    }
}

TEST_CASE("rendering helpers match the table style") {
    auto e6 = dynkin(Family::E, 6);
    CHECK(render_vector(e6, {1, 2, 3, 2, 1, 2}) == "(1 2 3 2 1 | u = 2)");
    CHECK(render_vector(dynkin(Family::F, 4), {2, 4, 3, 2}) == "(2 4 3 2)");
    CHECK(render_condition({{"b", '>', 2}}) == "b >= 2");
    CHECK(render_condition({{"d", '=', 2}, {"e", '<', 1}}) == "d = 2, e <= 1");
}
