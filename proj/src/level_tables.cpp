#include "rootposet/level_tables.hpp"

#include <algorithm>
#include <sstream>

namespace rootposet {

namespace {

std::vector<CondAtom> cond(std::initializer_list<CondAtom> atoms) { return atoms; }

PublishedLevel explicit_level(std::vector<CondAtom> c, std::vector<std::vector<int>> minima,
                              std::vector<int> maximum, long count) {
    PublishedLevel l;
    l.condition = std::move(c);
    l.minima_kind = MinimaKind::Explicit;
    l.minima = std::move(minima);
    l.maximum = std::move(maximum);
    l.count = count;
    return l;
}

PublishedLevel simples_level(std::vector<CondAtom> c, std::vector<int> maximum, long count) {
    PublishedLevel l;
    l.condition = std::move(c);
    l.minima_kind = MinimaKind::ChainSimples;
    l.maximum = std::move(maximum);
    l.count = count;
    return l;
}

PublishedTable table_D(int n) {
    // chain indices 0..n-2, u = n-1
    std::vector<int> top1(n, 1);
    top1[n - 1] = 0; // chain all ones, u = 0
    std::vector<int> bot2(n, 0);
    bot2[n - 1] = 1; // u alone
    std::vector<int> top2(n, 2);
    top2[0] = top2[n - 2] = top2[n - 1] = 1; // 1 2 ... 2 1 | u = 1
    long half = long(n) * (n - 1) / 2;

    PublishedTable t{Family::D, n, {}};
    t.levels.push_back(simples_level(cond({{"u", '=', 0}}), top1, half));
    t.levels.push_back(explicit_level(cond({{"u", '=', 1}}), {bot2}, top2, half));
    return t;
}

PublishedTable table_E6() {
    PublishedTable t{Family::E, 6, {}};
    t.levels.push_back(simples_level(cond({{"u", '=', 0}}), {1, 1, 1, 1, 1, 0}, 15));
    t.levels.push_back(explicit_level(cond({{"u", '=', 1}}), {{0, 0, 0, 0, 0, 1}},
                                      {1, 1, 1, 1, 1, 1}, 10));
    t.levels.push_back(explicit_level(cond({{"c", '>', 2}}), {{0, 1, 2, 1, 0, 1}},
                                      {1, 2, 3, 2, 1, 1}, 11));
    return t;
}

PublishedTable table_E7() {
    PublishedTable t{Family::E, 7, {}};
    t.levels.push_back(simples_level(cond({{"u", '=', 0}}), {1, 1, 1, 1, 1, 1, 0}, 21));
    t.levels.push_back(explicit_level(cond({{"u", '=', 1}, {"c", '<', 1}}),
                                      {{0, 0, 0, 0, 0, 0, 1}}, {1, 1, 1, 1, 1, 1, 1}, 13));
    t.levels.push_back(explicit_level(cond({{"c", '=', 2}, {"d", '=', 1}}),
                                      {{0, 1, 2, 1, 0, 0, 1}}, {1, 2, 2, 1, 1, 1, 1}, 9));
    t.levels.push_back(explicit_level(cond({{"d", '>', 2}}), {{0, 1, 2, 2, 1, 0, 1}},
                                      {2, 3, 4, 3, 2, 1, 2}, 20));
    return t;
}

PublishedTable table_E8() {
    PublishedTable t{Family::E, 8, {}};
    t.levels.push_back(simples_level(cond({{"u", '=', 0}}), {1, 1, 1, 1, 1, 1, 1, 0}, 28));
    t.levels.push_back(explicit_level(cond({{"u", '=', 1}, {"c", '<', 1}}),
                                      {{0, 0, 0, 0, 0, 0, 0, 1}}, {1, 1, 1, 1, 1, 1, 1, 1}, 16));
    t.levels.push_back(explicit_level(cond({{"c", '=', 2}, {"d", '=', 1}}),
                                      {{0, 1, 2, 1, 0, 0, 0, 1}}, {1, 2, 2, 1, 1, 1, 1, 1}, 12));
    t.levels.push_back(explicit_level(cond({{"d", '=', 2}, {"e", '=', 1}}),
                                      {{0, 1, 2, 2, 1, 0, 0, 1}}, {1, 2, 3, 2, 1, 1, 1, 2}, 15));
    t.levels.push_back(explicit_level(cond({{"d", '=', 2}, {"e", '=', 3}}),
                                      {{0, 1, 2, 2, 2, 1, 0, 1}}, {1, 2, 3, 2, 2, 2, 1, 2}, 15));
    t.levels.push_back(explicit_level(cond({{"d", '>', 3}}), {{1, 2, 3, 3, 2, 1, 0, 1}},
                                      {2, 4, 6, 5, 4, 3, 12, 3}, 34));
    return t;
}

PublishedTable table_F4() {
    PublishedTable t{Family::F, 4, {}};
    t.levels.push_back(simples_level(cond({{"b", '<', 1}}), {1, 1, 1, 1}, 10));
    t.levels.push_back(explicit_level(cond({{"b", '>', 2}}), {{0, 2, 1, 0}}, {2, 4, 3, 2}, 14));
    return t;
}

// Known misprints: the correction is the value the other table columns force.
struct Erratum {
    Family family;
    int rank;
    int level;
    const char* field; // "condition" or "maximum"
    std::vector<CondAtom> condition;
    std::vector<int> maximum;
};

const std::vector<Erratum>& known_errata() {
    static const std::vector<Erratum> e = {
        {Family::E, 6, 3, "maximum", {}, {1, 2, 3, 2, 1, 2}},
        {Family::E, 8, 5, "condition", {{"d", '=', 2}, {"e", '=', 2}}, {}},
        {Family::E, 8, 6, "maximum", {}, {2, 4, 6, 5, 4, 3, 2, 3}},
    };
    return e;
}

const Erratum* find_erratum(const DynkinDiagram& d, int level, const char* field) {
    for (const auto& e : known_errata())
        if (e.family == d.family && e.rank == d.rank && e.level == level &&
            std::string(field) == e.field)
            return &e;
    return nullptr;
}

bool satisfies(const Root& r, const DynkinDiagram& d, const std::vector<CondAtom>& atoms) {
    for (const auto& a : atoms) {
        int idx = d.node_index(a.node);
        if (idx < 0) throw VerificationFailure("condition names unknown node " + a.node);
        int c = r.coeffs[idx];
        bool ok = a.rel == '=' ? c == a.bound : a.rel == '<' ? c <= a.bound : c >= a.bound;
        if (!ok) return false;
    }
    return true;
}

IndexSet chain_simple_indices(const RootPoset& rp) {
    const DynkinDiagram& d = rp.diagram();
    IndexSet s(rp.size());
    for (int i = 0; i < d.rank; ++i) {
        if (d.node_names[i] == "u") continue;
        Root alpha{std::vector<int>(d.rank, 0)};
        alpha.coeffs[i] = 1;
        s.set(rp.index_of(alpha));
    }
    return s;
}

} // namespace

std::string render_condition(const std::vector<CondAtom>& atoms) {
    std::ostringstream os;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (k) os << ", ";
        os << atoms[k].node << (atoms[k].rel == '=' ? " = " : atoms[k].rel == '<' ? " <= " : " >= ")
           << atoms[k].bound;
    }
    return os.str();
}

std::string render_vector(const DynkinDiagram& d, const std::vector<int>& coeffs) {
    bool has_u = d.node_index("u") >= 0;
    int chain = has_u ? d.rank - 1 : d.rank;
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < chain; ++i) {
        if (i) os << ' ';
        os << coeffs[i];
    }
    if (has_u) os << " | u = " << coeffs[d.rank - 1];
    os << ')';
    return os.str();
}

bool has_published_table(const DynkinDiagram& d) {
    switch (d.family) {
    case Family::D: return true;
    case Family::E: return true;
    case Family::F: return true;
    default: return false;
    }
}

PublishedTable published_table(const DynkinDiagram& d) {
    switch (d.family) {
    case Family::D: return table_D(d.rank);
    case Family::E:
        if (d.rank == 6) return table_E6();
        if (d.rank == 7) return table_E7();
        return table_E8();
    case Family::F: return table_F4();
    default: throw UnsupportedDiagram(d.name() + ": no published level table");
    }
}

int LevelDecomposition::level_of(int element) const {
    for (std::size_t k = 0; k < levels.size(); ++k)
        if (levels[k].test(element)) return int(k) + 1;
    return 0;
}

LevelDecomposition verify_level_table(const RootPoset& rp) {
    const DynkinDiagram& d = rp.diagram();
    const PublishedTable tab = published_table(d);
    const Poset& P = rp.order();
    const int N = rp.size();
    const int K = int(tab.levels.size());

    auto fail = [&](int level, const std::string& what) {
        throw VerificationFailure(d.name() + " level " + std::to_string(level) + ": " + what);
    };

    // published minimal elements as index sets
    std::vector<IndexSet> gen(K);
    for (int k = 0; k < K; ++k) {
        const PublishedLevel& pl = tab.levels[k];
        if (pl.minima_kind == MinimaKind::ChainSimples) {
            gen[k] = chain_simple_indices(rp);
        } else {
            gen[k] = IndexSet(N);
            for (const auto& vec : pl.minima) {
                int idx = rp.index_of(Root{vec});
                if (idx < 0) fail(k + 1, "published minimal element is not a root");
                gen[k].set(idx);
            }
        }
    }

    LevelDecomposition out;
    out.levels.assign(K, IndexSet(N));
    IndexSet higher(N);
    for (int k = K; k >= 1; --k) {
        IndexSet s = rp.coideal(gen[k - 1]);
        s.subtract(higher);
        out.levels[k - 1] = s;
        higher |= s;
    }
    if (!(higher == IndexSet::full(N)))
        throw VerificationFailure(d.name() + ": levels do not cover the whole poset");

    for (int k = 1; k <= K; ++k) {
        const PublishedLevel& pl = tab.levels[k - 1];
        const IndexSet& lev = out.levels[k - 1];

        if (lev.count() != pl.count)
            fail(k, "count is " + std::to_string(lev.count()) + ", published " +
                        std::to_string(pl.count));

        if (!(P.minimal_elements(lev) == gen[k - 1]))
            fail(k, "minimal elements disagree with the published list");

        IndexSet maxima = P.maximal_elements(lev);
        if (maxima.count() != 1) fail(k, "level does not have a unique maximal element");
        const Root& top = rp.root(maxima.first());
        if (top.coeffs != pl.maximum) {
            const Erratum* err = find_erratum(d, k, "maximum");
            if (!err) fail(k, "maximal element disagrees with the published one");
            if (top.coeffs != err->maximum)
                fail(k, "maximal element disagrees with the recorded correction");
            out.warnings.push_back({k, "maximum", render_vector(d, pl.maximum),
                                    render_vector(d, err->maximum)});
        }

        // The condition column must cut out the level exactly, or exactly once
        // the higher levels are removed.
        auto matches = [&](const std::vector<CondAtom>& atoms) {
            IndexSet cut(N);
            for (int i = 0; i < N; ++i)
                if (satisfies(rp.root(i), d, atoms)) cut.set(i);
            if (cut == lev) return true;
            for (int j = k + 1; j <= K; ++j) cut.subtract(out.levels[j - 1]);
            return cut == lev;
        };
        if (!matches(pl.condition)) {
            const Erratum* err = find_erratum(d, k, "condition");
            if (!err) fail(k, "condition does not cut out the level");
            if (!matches(err->condition))
                fail(k, "recorded condition correction does not cut out the level");
            out.warnings.push_back({k, "condition", render_condition(pl.condition),
                                    render_condition(err->condition)});
        }
    }
    return out;
}

} // namespace rootposet
