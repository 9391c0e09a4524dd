#include "rootposet/lemma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rootposet/errors.hpp"

namespace rootposet {

namespace {

IndexSet set_of(const std::vector<int>& elems, int universe) {
    IndexSet s(universe);
    for (int e : elems) s.set(e);
    return s;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
        return v;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

// perfect matching of Y positions (minus skip_y) into X positions (minus
// f(skip_y), g(skip_y)), each y matched to f(y) or g(y)
std::vector<int> glue_matching(const LemmaWitness& w, int skip_y) {
    int nx = static_cast<int>(w.X.size()), ny = static_cast<int>(w.Y.size());
    std::vector<int> match_x(static_cast<size_t>(nx), -1), match_y(static_cast<size_t>(ny), -1);
    int banned_a = w.f[static_cast<size_t>(skip_y)], banned_b = w.g[static_cast<size_t>(skip_y)];

    std::vector<bool> visited;
    std::function<bool(int)> augment = [&](int y) {
        for (int x : {w.f[static_cast<size_t>(y)], w.g[static_cast<size_t>(y)]}) {
            if (x == banned_a || x == banned_b || visited[static_cast<size_t>(x)]) continue;
            visited[static_cast<size_t>(x)] = true;
            if (match_x[static_cast<size_t>(x)] < 0 || augment(match_x[static_cast<size_t>(x)])) {
                match_x[static_cast<size_t>(x)] = y;
                match_y[static_cast<size_t>(y)] = x;
                return true;
            }
        }
        return false;
    };
    for (int y = 0; y < ny; ++y) {
        if (y == skip_y) continue;
        visited.assign(static_cast<size_t>(nx), false);
        if (!augment(y)) return {};
    }
    return match_y;
}

}  // namespace

HypothesisReport check_witness(const RootPoset& rp, const LemmaWitness& w) {
    HypothesisReport rep;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
    const Poset& p = rp.order();
    int N = rp.size();

    if (w.deleted.universe() != N) {
        fail("deleted set has the wrong universe");
        return rep;
    }
    IndexSet mask = w.deleted.complement();

    auto check_antichain = [&](const Antichain& a, const char* name) {
        if (a.empty()) fail(std::string(name) + " is empty");
        if (!std::is_sorted(a.begin(), a.end())) fail(std::string(name) + " is not sorted");
        for (int e : a)
            if (e < 0 || e >= N || !mask.test(e)) fail(std::string(name) + " leaves the poset");
        if (!p.is_antichain(set_of(a, N))) fail(std::string(name) + " is not an antichain");
    };
    check_antichain(w.X, "X");
    check_antichain(w.Y, "Y");
    if (!rep.ok()) return rep;
    if (w.Y.size() >= w.X.size()) fail("Y must be smaller than X");

    w.deleted.for_each([&](int dropped) {
        for (int y : w.Y)
            if (!p.less(dropped, y)) fail("a deleted element is not below all of Y");
    });

    IndexSet I = p.ideal(set_of(w.X, N));
    I &= mask;
    IndexSet J = p.coideal(set_of(w.Y, N));
    J &= mask;
    if (I.intersects(J)) fail("ideal of X meets coideal of Y");
    if (!((I | J) == mask)) fail("ideal of X and coideal of Y do not exhaust the poset");

    auto check_cover = [&](const std::vector<std::vector<int>>& chains, const IndexSet& ground,
                           const Antichain& marks, bool mark_is_top, const char* name) {
        if (chains.size() != marks.size()) {
            fail(std::string(name) + " has the wrong number of chains");
            return;
        }
        IndexSet seen(N);
        for (size_t k = 0; k < chains.size(); ++k) {
            const auto& chain = chains[k];
            if (chain.empty()) {
                fail(std::string(name) + " contains an empty chain");
                continue;
            }
            for (size_t t = 0; t + 1 < chain.size(); ++t)
                if (!p.less(chain[t], chain[t + 1]))
                    fail(std::string(name) + " chain " + std::to_string(k) + " is not increasing");
            int marked = mark_is_top ? chain.back() : chain.front();
            if (marked != marks[k])
                fail(std::string(name) + " chain " + std::to_string(k) +
                     " is not anchored at its antichain element");
            for (int e : chain) {
                if (!ground.test(e)) fail(std::string(name) + " chain leaves its ground set");
                if (seen.test(e)) fail(std::string(name) + " chains overlap");
                seen.set(e);
            }
        }
        if (!(seen == ground)) fail(std::string(name) + " chains do not cover the ground set");
    };
    check_cover(w.I_chains, I, w.X, true, "I cover");
    check_cover(w.J_chains, J, w.Y, false, "J cover");

    if (w.f.size() != w.Y.size() || w.g.size() != w.Y.size()) {
        fail("f and g must assign a pair to every element of Y");
        return rep;
    }
    Dsu dsu(static_cast<int>(w.X.size()));
    for (size_t k = 0; k < w.Y.size(); ++k) {
        int a = w.f[k], b = w.g[k];
        if (a < 0 || b < 0 || a >= static_cast<int>(w.X.size()) || b >= static_cast<int>(w.X.size()) ||
            a == b) {
            fail("f, g pair " + std::to_string(k) + " is malformed");
            continue;
        }
        if (!p.less(w.X[static_cast<size_t>(a)], w.Y[k]) ||
            !p.less(w.X[static_cast<size_t>(b)], w.Y[k]))
            fail("f, g pair " + std::to_string(k) + " is not below its element of Y");
        if (!dsu.join(a, b)) fail("edges of pair " + std::to_string(k) + " close a cycle");
    }
    return rep;
}

ConclusionRecord lemma_conclusion(const RootPoset& rp, const LemmaWitness& w) {
    HypothesisReport hyp = check_witness(rp, w);
    if (!hyp.ok()) throw ConclusionFailure("hypotheses fail: " + hyp.failures.front());

    const Poset& p = rp.order();
    int N = rp.size();
    IndexSet mask = w.deleted.complement();
    int nx = static_cast<int>(w.X.size());

    ConclusionRecord rec;
    rec.glued_chain_count = nx - 2;

    std::vector<int> chain_of(static_cast<size_t>(N), -1);
    for (size_t k = 0; k < w.J_chains.size(); ++k)
        for (int e : w.J_chains[k]) chain_of[static_cast<size_t>(e)] = static_cast<int>(k);

    IndexSet J = p.coideal(set_of(w.Y, N));
    J &= mask;
    for (int z = J.first(); z >= 0; z = J.next(z)) {
        int ky = chain_of[static_cast<size_t>(z)];
        std::vector<int> glue = glue_matching(w, ky);
        if (glue.empty() && w.Y.size() > 1)
            throw ConclusionFailure("no gluing matching for element " + std::to_string(z));

        IndexSet incomp = p.incomparables(z);
        incomp &= mask;
        IndexSet covered(N);
        int chains_used = 0;
        for (int x = 0; x < nx; ++x) {
            if (x == w.f[static_cast<size_t>(ky)] || x == w.g[static_cast<size_t>(ky)]) continue;
            std::vector<int> chain = w.I_chains[static_cast<size_t>(x)];
            for (size_t yk = 0; yk < w.Y.size(); ++yk)
                if (static_cast<int>(yk) != ky && glue[yk] == x)
                    chain.insert(chain.end(), w.J_chains[yk].begin(), w.J_chains[yk].end());
            for (size_t t = 0; t + 1 < chain.size(); ++t)
                if (!p.less(chain[t], chain[t + 1]))
                    throw ConclusionFailure("glued cover is not a chain at element " +
                                            std::to_string(z));
            ++chains_used;
            for (int e : chain) covered.set(e);
        }
        if (chains_used != nx - 2)
            throw ConclusionFailure("glued cover has the wrong number of chains");
        if (!incomp.is_subset_of(covered))
            throw ConclusionFailure("glued chains miss an incomparable of element " +
                                    std::to_string(z));

        int brute = width(p, incomp).width;
        if (brute > nx - 2)
            throw ConclusionFailure("incomparables of element " + std::to_string(z) +
                                    " have width " + std::to_string(brute));
        rec.max_incomparable_width = std::max(rec.max_incomparable_width, brute);
        ++rec.z_checked;
    }

    rec.width_P = width(p, mask).width;
    if (rec.width_P != nx)
        throw ConclusionFailure("width after deletion is " + std::to_string(rec.width_P) +
                                ", expected " + std::to_string(nx));
    std::vector<Antichain> maximal = maximal_antichains_of_size(p, mask, nx);
    rec.unique_maximal = maximal.size() == 1 && maximal.front() == w.X;
    if (!rec.unique_maximal)
        throw ConclusionFailure("X is not the unique maximal antichain of its size");
    return rec;
}

LemmaWitness find_witness(const RootPoset& rp) {
    const DynkinDiagram& d = rp.diagram();
    bool eligible = d.family == Family::E || (d.family == Family::F && d.rank == 4);
    if (!eligible)
        throw UnsupportedDiagram("witness search covers E6, E7, E8 and F4, not " + d.name());

    const Poset& p = rp.order();
    int N = rp.size();
    int n = d.rank;
    IndexSet full = IndexSet::full(N);

    std::vector<Antichain> maximal = maximal_antichains_of_size(p, full, n - 1);
    if (maximal.size() != 1)
        throw WitnessNotFound(d.name() + " has " + std::to_string(maximal.size()) +
                              " maximal antichains of size " + std::to_string(n - 1));
    LemmaWitness w;
    w.diagram = d.name();
    w.X = maximal.front();

    IndexSet J = p.ideal(set_of(w.X, N)).complement();
    w.Y = p.minimal_elements(J).to_vector();
    if (w.Y.size() >= w.X.size())
        throw WitnessNotFound("complement of the ideal of X has too many minima in " + d.name());

    // deleted element: a basis root below all of Y, preferring the node named c
    std::vector<int> candidates;
    rp.simple_roots().for_each([&](int s) {
        for (int y : w.Y)
            if (!p.less(s, y)) return;
        candidates.push_back(s);
    });
    if (candidates.empty())
        throw WitnessNotFound("no basis root lies below all of Y in " + d.name());
    int clover = candidates.front();
    int c_node = d.node_index("c");
    for (int s : candidates) {
        const Root& r = rp.root(s);
        if (c_node >= 0 && r.coeffs[static_cast<size_t>(c_node)] == 1) clover = s;
    }
    w.deleted = IndexSet(N);
    w.deleted.set(clover);
    for (size_t k = 0; k < rp.root(clover).coeffs.size(); ++k)
        if (rp.root(clover).coeffs[k] == 1) w.deleted_node = d.node_names[k];

    IndexSet mask = w.deleted.complement();
    IndexSet I = p.ideal(set_of(w.X, N));
    I &= mask;

    // chain covers anchored on X (tops) and Y (bottoms)
    ChainCover icover = min_chain_cover(p, I);
    if (icover.chains.size() != w.X.size())
        throw WitnessNotFound("ideal of X has width " + std::to_string(icover.chains.size()) +
                              " in " + d.name());
    w.I_chains.resize(w.X.size());
    for (size_t k = 0; k < w.X.size(); ++k) {
        int c = icover.chain_of(w.X[k]);
        if (c < 0 || icover.chains[static_cast<size_t>(c)].back() != w.X[k])
            throw WitnessNotFound("chain cover of the ideal is not topped by X");
        w.I_chains[k] = icover.chains[static_cast<size_t>(c)];
    }
    ChainCover jcover = min_chain_cover(p, J);
    if (jcover.chains.size() != w.Y.size())
        throw WitnessNotFound("coideal of Y has width " + std::to_string(jcover.chains.size()) +
                              " in " + d.name());
    w.J_chains.resize(w.Y.size());
    for (size_t k = 0; k < w.Y.size(); ++k) {
        int c = jcover.chain_of(w.Y[k]);
        if (c < 0 || jcover.chains[static_cast<size_t>(c)].front() != w.Y[k])
            throw WitnessNotFound("chain cover of the coideal is not bottomed by Y");
        w.J_chains[k] = jcover.chains[static_cast<size_t>(c)];
    }

    // assign (f, g) scanning Y by decreasing height, pairs lexicographically
    std::vector<int> order(w.Y.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ha = rp.height(w.Y[static_cast<size_t>(a)]), hb = rp.height(w.Y[static_cast<size_t>(b)]);
        if (ha != hb) return ha > hb;
        return w.Y[static_cast<size_t>(a)] < w.Y[static_cast<size_t>(b)];
    });
    std::vector<std::vector<int>> below(w.Y.size());
    for (size_t k = 0; k < w.Y.size(); ++k)
        for (size_t x = 0; x < w.X.size(); ++x)
            if (p.less(w.X[x], w.Y[k])) below[k].push_back(static_cast<int>(x));

    w.f.assign(w.Y.size(), -1);
    w.g.assign(w.Y.size(), -1);
    std::function<bool(size_t, Dsu)> assign = [&](size_t pos, Dsu dsu) {
        if (pos == order.size()) return true;
        size_t k = static_cast<size_t>(order[pos]);
        const std::vector<int>& cand = below[k];
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = a + 1; b < cand.size(); ++b) {
                Dsu next = dsu;
                if (!next.join(cand[a], cand[b])) continue;
                w.f[k] = cand[a];
                w.g[k] = cand[b];
                if (assign(pos + 1, std::move(next))) return true;
            }
        w.f[k] = w.g[k] = -1;
        return false;
    };
    if (!assign(0, Dsu(static_cast<int>(w.X.size()))))
        throw WitnessNotFound("no forest assignment of (f, g) pairs exists for " + d.name());

    HypothesisReport rep = check_witness(rp, w);
    if (!rep.ok()) throw WitnessNotFound("constructed witness fails: " + rep.failures.front());
    return w;
}

}  // namespace rootposet
