#include <doctest.h>

#include <utility>
#include <vector>

#include "rootposet/poset.hpp"
#include "rootposet/root_poset.hpp"

using namespace rootposet;

namespace {

Poset diamond() {
    // 0 < 1, 0 < 2, 1 < 3, 2 < 3
    return Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST_CASE("from_relations closes transitively and keeps reflexivity") {
    auto p = Poset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.less(0, 2));
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.less(1, 1));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.comparable(0, 2));
}

TEST_CASE("cycles are rejected") {
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), IdentityViolation);
    CHECK_THROWS_AS(Poset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}), IdentityViolation);
}

TEST_CASE("from_leq validates the given relation") {
    // broken transitivity: 0 <= 1, 1 <= 2, but not 0 <= 2
    auto bad = [](int a, int b) { return a == b || (a == 0 && b == 1) || (a == 1 && b == 2); };
    CHECK_THROWS_AS(Poset::from_leq(3, bad), IdentityViolation);

    auto missing_reflexive = [](int a, int b) { return a < b; };
    CHECK_THROWS_AS(Poset::from_leq(2, missing_reflexive), IdentityViolation);

    auto chain = [](int a, int b) { return a <= b; };
    CHECK_NOTHROW(Poset::from_leq(4, chain));
}

TEST_CASE("cover pairs are the transitive reduction") {
    auto p = diamond();
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    CHECK(p.cover_pairs() == want);

    auto chain = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
    std::vector<std::pair<int, int>> reduced = {{0, 1}, {1, 2}};
    CHECK(chain.cover_pairs() == reduced);
}

TEST_CASE("ideals, coideals and extremal elements") {
    auto p = diamond();
    IndexSet top(4);
    top.set(1);
    CHECK(p.ideal(top) == IndexSet::of(4, {0, 1}));
    CHECK(p.coideal(top) == IndexSet::of(4, {1, 3}));

    auto all = IndexSet::full(4);
    CHECK(p.minimal_elements(all) == IndexSet::of(4, {0}));
    CHECK(p.maximal_elements(all) == IndexSet::of(4, {3}));

    auto middle = IndexSet::of(4, {1, 2});
    CHECK(p.minimal_elements(middle) == middle);
    CHECK(p.is_antichain(middle));
    CHECK_FALSE(p.is_chain(middle));
    CHECK(p.is_chain(IndexSet::of(4, {0, 1, 3})));
    CHECK(p.incomparable_pair_count(all) == 1);
}

TEST_CASE("grades count the longest chain below") {
    auto p = diamond();
    CHECK(p.grades() == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("hasse reachability reproduces the full order on a root poset") {
    RootPoset rp = build_poset(dynkin(Family::B, 4));
    const Poset& p = rp.order();
    const int n = rp.size();

    std::vector<IndexSet> reach;
    reach.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        IndexSet r(n);
        r.set(i);
        reach.push_back(r);
    }
    auto covers = p.cover_pairs();
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [lo, hi] : covers) {
            IndexSet merged = reach[std::size_t(lo)] | reach[std::size_t(hi)];
            if (!(merged == reach[std::size_t(lo)])) {
                reach[std::size_t(lo)] = merged;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i) CHECK(reach[std::size_t(i)] == p.up(i));
}

TEST_CASE("incomparable rows partition against up and down") {
    RootPoset rp = build_poset(dynkin(Family::A, 4));
    const Poset& p = rp.order();
    for (int i = 0; i < p.size(); ++i) {
        IndexSet u = p.up(i) | p.down(i) | p.incomparables(i);
        CHECK(u == IndexSet::full(p.size()));
        CHECK_FALSE(p.incomparables(i).test(i));
        CHECK_FALSE(p.up(i).intersects(p.incomparables(i)));
        CHECK_FALSE(p.down(i).intersects(p.incomparables(i)));
    }
}

TEST_CASE("index set primitives") {
    IndexSet s = IndexSet::of(70, {0, 3, 64, 69});
    CHECK(s.count() == 4);
    CHECK(s.test(64));
    CHECK_FALSE(s.test(1));
    CHECK(s.first() == 0);
    CHECK(s.next(3) == 64);
    CHECK(s.next(69) == -1);
    CHECK(s.to_vector() == std::vector<int>{0, 3, 64, 69});

    IndexSet t = IndexSet::of(70, {3, 5});
    CHECK((s & t) == IndexSet::of(70, {3}));
    CHECK((s | t).count() == 5);
    s.subtract(t);
    CHECK_FALSE(s.test(3));
    CHECK(IndexSet::of(70, {3}).is_subset_of(t));
    CHECK(t.complement().count() == 68);
    CHECK(IndexSet(5).empty());
    CHECK(IndexSet::full(5).count() == 5);
}
