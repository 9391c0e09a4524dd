#include "rootposet/antichains.hpp"

#include <algorithm>

namespace rootposet {

namespace {

struct Dfs {
    const Poset& p;
    std::optional<int> want;
    const std::function<void(const Antichain&)>& sink;
    Antichain chosen;

    void run(const IndexSet& candidates) {
        if (!want || int(chosen.size()) == *want) {
            sink(chosen);
            if (want) return; // nothing below extends a full antichain usefully
        }
        if (want && int(chosen.size()) + candidates.count() < *want) return;
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            IndexSet next = candidates & p.incomparables(v);
            // keep only indices above v so each set is produced once, in lex order
            for (int w = next.first(); w >= 0 && w <= v; w = next.next(w)) next.reset(w);
            chosen.push_back(v);
            run(next);
            chosen.pop_back();
            if (want && int(chosen.size()) + candidates_left(candidates, v) < *want) break;
        }
    }

    static int candidates_left(const IndexSet& c, int from) {
        int k = 0;
        for (int v = c.next(from); v >= 0; v = c.next(v)) ++k;
        return k;
    }
};

} // namespace

void for_each_antichain(const Poset& p, const IndexSet& mask, std::optional<int> size,
                        const std::function<void(const Antichain&)>& sink) {
    Dfs dfs{p, size, sink, {}};
    dfs.run(mask);
}

std::vector<Antichain> enumerate_antichains(const Poset& p, const IndexSet& mask,
                                            std::optional<int> size) {
    std::vector<Antichain> out;
    for_each_antichain(p, mask, size, [&](const Antichain& a) { out.push_back(a); });
    return out;
}

SizeDistribution size_distribution(const Poset& p, const IndexSet& mask) {
    SizeDistribution d;
    for_each_antichain(p, mask, std::nullopt, [&](const Antichain& a) {
        if (a.size() >= d.counts.size()) d.counts.resize(a.size() + 1, 0);
        d.counts[a.size()] += 1;
    });
    return d;
}

namespace {

void width_dfs(const Poset& p, const IndexSet& candidates, Antichain& chosen,
               WidthResult& best) {
    if (int(chosen.size()) > best.width) {
        best.width = int(chosen.size());
        best.witness = chosen;
    }
    if (int(chosen.size()) + candidates.count() <= best.width) return;
    IndexSet rest = candidates;
    for (int v = rest.first(); v >= 0; v = rest.next(v)) {
        if (int(chosen.size()) + rest.count() <= best.width) return;
        IndexSet next = rest & p.incomparables(v);
        chosen.push_back(v);
        width_dfs(p, next, chosen, best);
        chosen.pop_back();
        rest.reset(v); // branches that skip v entirely
    }
}

} // namespace

WidthResult width(const Poset& p, const IndexSet& mask) {
    WidthResult best;
    Antichain chosen;
    width_dfs(p, mask, chosen, best);
    return best;
}

int width_through(const Poset& p, const IndexSet& mask, int element) {
    IndexSet candidates = p.incomparables(element) & mask;
    return 1 + width(p, candidates).width;
}

bool dominated_by(const Poset& p, const Antichain& a, const Antichain& b) {
    for (int x : a) {
        bool bounded = false;
        for (int y : b)
            if (p.leq(x, y)) {
                bounded = true;
                break;
            }
        if (!bounded) return false;
    }
    return true;
}

std::vector<Antichain> maximal_antichains_of_size(const Poset& p, const IndexSet& mask, int t) {
    std::vector<Antichain> all = enumerate_antichains(p, mask, t);
    std::vector<Antichain> out;
    for (const Antichain& a : all) {
        bool maximal = true;
        for (const Antichain& b : all) {
            if (&a == &b || a == b) continue;
            if (dominated_by(p, a, b)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(a);
    }
    return out;
}

int expected_theorem_h(Family f) {
    switch (f) {
    case Family::A: return 2;
    case Family::B:
    case Family::C:
    case Family::D: return 3;
    case Family::E: return 0; // rank dependent, handled by caller
    case Family::F: return 5;
    case Family::G: return 5;
    }
    return 0;
}

namespace {

int expected_h_for(const DynkinDiagram& d) {
    if (d.family == Family::E) return d.rank == 6 ? 4 : d.rank == 7 ? 5 : 7;
    return expected_theorem_h(d.family);
}

} // namespace

TheoremReport check_main_theorem(const RootPoset& rp) {
    TheoremReport rep;
    const Poset& p = rp.order();
    const int n = rp.diagram().rank;
    const IndexSet all = IndexSet::full(rp.size());
    rep.diagram = rp.diagram().name();
    rep.expected_h = expected_h_for(rp.diagram());

    LevelProfile prof = rp.level_profile();
    rep.h = prof.h;
    rep.h_matches = rep.h == rep.expected_h;
    if (!rep.h_matches) rep.failures.push_back("h != table value");

    IndexSet phi_h = rp.level_set(rep.h);
    Antichain phi_h_vec = phi_h.to_vector();
    rep.phi_h_is_antichain = p.is_antichain(phi_h) && phi_h.count() == n - 1;
    if (!rep.phi_h_is_antichain) rep.failures.push_back("Phi_h is not an (n-1)-antichain");

    std::vector<Antichain> all_nm1 = enumerate_antichains(p, all, n - 1);
    rep.antichain_count = long(all_nm1.size());
    rep.maximal_list = maximal_antichains_of_size(p, all, n - 1);
    rep.unique_maximal = rep.maximal_list.size() == 1;
    if (!rep.unique_maximal) rep.failures.push_back("maximal (n-1)-antichain not unique");

    const bool is_e6 = rp.diagram().family == Family::E && n == 6;
    if (!is_e6) {
        rep.equals_phi_h = rep.unique_maximal && rep.maximal_list[0] == phi_h_vec;
        if (!rep.equals_phi_h) rep.failures.push_back("unique maximal (n-1)-antichain != Phi_h");
        rep.all_dominated = true;
        for (const Antichain& a : all_nm1)
            if (!dominated_by(p, a, phi_h_vec)) {
                rep.all_dominated = false;
                rep.failures.push_back("an (n-1)-antichain is not dominated by Phi_h");
                break;
            }
    } else {
        TheoremReport::E6Exception exc;
        rep.equals_phi_h = rep.unique_maximal && rep.maximal_list[0] == phi_h_vec;
        exc.phi_h_not_maximal = !rep.equals_phi_h;
        if (rep.unique_maximal) {
            const Antichain& m = rep.maximal_list[0];
            bool has_h = false, has_h1 = false, only = true, inside = true;
            IndexSet phi_h1 = rp.level_set(rep.h + 1);
            for (int x : m) {
                int t = rp.height(x);
                if (t == rep.h) has_h = true;
                else if (t == rep.h + 1) has_h1 = true;
                else only = false;
                if (!phi_h.test(x) && !phi_h1.test(x)) inside = false;
            }
            exc.heights_are_h_and_h1 = has_h && has_h1 && only;
            exc.inside_phi_h_union_h1 = inside;
            IndexSet ideal_phi_h = rp.ideal(phi_h);
            exc.others_in_ideal_phi_h = true;
            for (const Antichain& a : all_nm1) {
                if (a == m) continue;
                for (int x : a)
                    if (!ideal_phi_h.test(x)) {
                        exc.others_in_ideal_phi_h = false;
                        break;
                    }
                if (!exc.others_in_ideal_phi_h) break;
            }
            if (!exc.phi_h_not_maximal) rep.failures.push_back("Phi_h unexpectedly maximal");
            if (!exc.heights_are_h_and_h1)
                rep.failures.push_back("maximal antichain heights are not {h, h+1}");
            if (!exc.inside_phi_h_union_h1)
                rep.failures.push_back("maximal antichain not inside Phi_h union Phi_{h+1}");
            if (!exc.others_in_ideal_phi_h)
                rep.failures.push_back("another (n-1)-antichain escapes ideal(Phi_h)");
        }
        rep.e6 = exc;
    }
    return rep;
}

void verify_main_theorem(const RootPoset& rp) {
    TheoremReport rep = check_main_theorem(rp);
    if (!rep.ok())
        throw VerificationFailure(rep.diagram + ": " + rep.failures.front());
}

} // namespace rootposet
