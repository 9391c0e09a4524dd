#include <doctest.h>

#include <string>

#include "rootposet/lemma.hpp"

using namespace rootposet;

namespace {

struct Expected {
    const char* token;
    std::size_t x_size, y_size;
    int z_checked, max_incomp;
};

const Expected expected[] = {
    {"E6", 5, 3, 14, 3},
    {"E7", 6, 5, 32, 4},
    {"E8", 7, 6, 70, 5},
    {"F4", 3, 2, 8, 1},
};

} // namespace

TEST_CASE("witnesses are found with the frozen shapes and all hypotheses hold") {
    for (const auto& e : expected) {
        RootPoset rp = build_poset(parse_diagram(e.token));
        LemmaWitness w = find_witness(rp);
        INFO(e.token);
        CHECK(w.diagram == e.token);
        CHECK(w.X.size() == e.x_size);
        CHECK(w.Y.size() == e.y_size);
        CHECK(w.deleted.count() == 1);
        CHECK(w.deleted_node == "c");
        CHECK(w.I_chains.size() == e.x_size);
        CHECK(w.J_chains.size() == e.y_size);
        CHECK(w.f.size() == e.y_size);
        CHECK(w.g.size() == e.y_size);

        HypothesisReport rep = check_witness(rp, w);
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.ok());

        // the removed element sits below everything in Y
        int del = w.deleted.first();
        for (int y : w.Y) CHECK(rp.order().less(del, y));
    }
}

TEST_CASE("the conclusion follows constructively and by brute force") {
    for (const auto& e : expected) {
        RootPoset rp = build_poset(parse_diagram(e.token));
        LemmaWitness w = find_witness(rp);
        ConclusionRecord rec = lemma_conclusion(rp, w);
        INFO(e.token);
        CHECK(rec.width_P == int(e.x_size));
        CHECK(rec.unique_maximal);
        CHECK(rec.z_checked == e.z_checked);
        CHECK(rec.max_incomparable_width == e.max_incomp);
        CHECK(rec.glued_chain_count == int(e.x_size) - 2);
        CHECK(rec.max_incomparable_width <= rec.glued_chain_count);
    }
}

TEST_CASE("witness construction is deterministic") {
    RootPoset rp = build_poset(dynkin(Family::E, 7));
    LemmaWitness w1 = find_witness(rp);
    LemmaWitness w2 = find_witness(rp);
    CHECK(w1.X == w2.X);
    CHECK(w1.Y == w2.Y);
    CHECK(w1.f == w2.f);
    CHECK(w1.g == w2.g);
    CHECK(w1.I_chains == w2.I_chains);
    CHECK(w1.J_chains == w2.J_chains);
}

TEST_CASE("tampered witnesses are rejected") {
    RootPoset rp = build_poset(dynkin(Family::F, 4));
    LemmaWitness good = find_witness(rp);
    REQUIRE(check_witness(rp, good).ok());

    {
        LemmaWitness w = good;
        w.g[0] = w.f[0]; // the pair must be two distinct positions
        CHECK_FALSE(check_witness(rp, w).ok());
        CHECK_THROWS_AS(lemma_conclusion(rp, w), ConclusionFailure);
    }
    {
        LemmaWitness w = good;
        w.J_chains[0].pop_back(); // chains no longer cover
        CHECK_FALSE(check_witness(rp, w).ok());
    }
    {
        LemmaWitness w = good;
        w.X.pop_back(); // chain count no longer matches
        CHECK_FALSE(check_witness(rp, w).ok());
    }
    {
        LemmaWitness w = good;
        w.deleted.set(rp.highest_root()); // not below Y
        CHECK_FALSE(check_witness(rp, w).ok());
    }
}

TEST_CASE("only the exceptional diagrams carry witnesses") {
    CHECK_THROWS_AS(find_witness(build_poset(dynkin(Family::A, 3))), UnsupportedDiagram);
    CHECK_THROWS_AS(find_witness(build_poset(dynkin(Family::B, 5))), UnsupportedDiagram);
    CHECK_THROWS_AS(find_witness(build_poset(dynkin(Family::G, 2))), UnsupportedDiagram);
}
