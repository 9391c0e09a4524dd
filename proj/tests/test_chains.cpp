#include <doctest.h>

#include "rootposet/antichains.hpp"
#include "rootposet/chains.hpp"
#include "rootposet/report.hpp"

using namespace rootposet;

TEST_CASE("minimum chain covers meet the width on every catalogued poset") {
    for (const auto& d : default_diagram_set()) {
        RootPoset rp = build_poset(d);
        const IndexSet all = IndexSet::full(rp.size());
        ChainCover cc = min_chain_cover(rp.order(), all);
        CHECK(int(cc.chains.size()) == width(rp.order(), all).width);

        IndexSet seen(rp.size());
        for (const auto& ch : cc.chains) {
            REQUIRE_FALSE(ch.empty());
            for (std::size_t k = 0; k < ch.size(); ++k) {
                CHECK_FALSE(seen.test(ch[k]));
                seen.set(ch[k]);
                if (k) CHECK(rp.order().less(ch[k - 1], ch[k]));
            }
        }
        CHECK(seen == all);
    }
}

TEST_CASE("covers of subposets") {
    RootPoset b4 = build_poset(dynkin(Family::B, 4));
    const Poset& p = b4.order();

    // an antichain needs one chain per element
    IndexSet simples = b4.simple_roots();
    ChainCover cc = min_chain_cover(p, simples);
    CHECK(cc.chains.size() == 4);
    for (const auto& ch : cc.chains) CHECK(ch.size() == 1);

    // a chain collapses to one cover chain
    RootPoset g2 = build_poset(dynkin(Family::G, 2));
    IndexSet chain = IndexSet::full(g2.size());
    chain.reset(g2.index_of(Root{{0, 1}}));
    REQUIRE(g2.order().is_chain(chain));
    ChainCover one = min_chain_cover(g2.order(), chain);
    REQUIRE(one.chains.size() == 1);
    CHECK(one.chains[0].size() == 5);

    // empty subset, empty cover
    CHECK(min_chain_cover(p, IndexSet(b4.size())).chains.empty());
}

TEST_CASE("chain lookup") {
    RootPoset a3 = build_poset(dynkin(Family::A, 3));
    IndexSet mask = IndexSet::full(a3.size());
    mask.reset(0);
    ChainCover cc = min_chain_cover(a3.order(), mask);
    for (int e = 1; e < a3.size(); ++e) {
        int k = cc.chain_of(e);
        REQUIRE(k >= 0);
        bool found = false;
        for (int x : cc.chains[std::size_t(k)]) found = found || x == e;
        CHECK(found);
    }
    CHECK(cc.chain_of(0) == -1);
}
