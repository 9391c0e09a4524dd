#include "rootposet/poset.hpp"

#include <string>

namespace rootposet {

void Poset::finish_rows() {
    down_.assign(n_, IndexSet(n_));
    incomp_.assign(n_, IndexSet(n_));
    for (int a = 0; a < n_; ++a)
        up_[a].for_each([&](int b) { down_[b].set(a); });
    for (int a = 0; a < n_; ++a) {
        IndexSet inc = up_[a] | down_[a];
        incomp_[a] = inc.complement();
    }
}

Poset Poset::from_leq(int n, const std::function<bool(int, int)>& leq) {
    Poset p;
    p.n_ = n;
    p.up_.assign(n, IndexSet(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq(a, b)) p.up_[a].set(b);
    p.finish_rows();
    p.validate();
    return p;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less_than) {
    std::vector<IndexSet> up(n, IndexSet(n));
    for (int a = 0; a < n; ++a) up[a].set(a);
    for (auto [a, b] : less_than) up[a].set(b);
    // closure: iterate until stable (tiny posets, simplicity over speed)
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            IndexSet next = up[a];
            up[a].for_each([&](int b) { next |= up[b]; });
            if (!(next == up[a])) {
                up[a] = std::move(next);
                changed = true;
            }
        }
    }
    Poset p;
    p.n_ = n;
    p.up_ = std::move(up);
    p.finish_rows();
    p.validate();
    return p;
}

IndexSet Poset::ideal(const IndexSet& s) const {
    IndexSet r(n_);
    s.for_each([&](int a) { r |= down_[a]; });
    return r;
}

IndexSet Poset::coideal(const IndexSet& s) const {
    IndexSet r(n_);
    s.for_each([&](int a) { r |= up_[a]; });
    return r;
}

IndexSet Poset::minimal_elements(const IndexSet& within) const {
    IndexSet r(n_);
    within.for_each([&](int a) {
        IndexSet strictly_below = down_[a] & within;
        strictly_below.reset(a);
        if (strictly_below.empty()) r.set(a);
    });
    return r;
}

IndexSet Poset::maximal_elements(const IndexSet& within) const {
    IndexSet r(n_);
    within.for_each([&](int a) {
        IndexSet strictly_above = up_[a] & within;
        strictly_above.reset(a);
        if (strictly_above.empty()) r.set(a);
    });
    return r;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n_; ++a) {
        IndexSet above = up_[a];
        above.reset(a);
        above.for_each([&](int b) {
            bool direct = true;
            IndexSet between = above & down_[b];
            between.reset(b);
            if (between.any()) direct = false;
            if (direct) covers.push_back({a, b});
        });
    }
    return covers; // already sorted by (a, b) by construction
}

std::vector<int> Poset::grades() const {
    std::vector<int> g(n_, -1);
    // longest path in the comparability DAG; memoized DFS without recursion depth issues
    std::function<int(int)> rec = [&](int a) -> int {
        if (g[a] >= 0) return g[a];
        int best = 0;
        IndexSet below = down_[a];
        below.reset(a);
        below.for_each([&](int b) {
            int v = rec(b) + 1;
            if (v > best) best = v;
        });
        return g[a] = best;
    };
    for (int a = 0; a < n_; ++a) rec(a);
    return g;
}

bool Poset::is_chain(const IndexSet& s) const {
    for (int a = s.first(); a >= 0; a = s.next(a))
        if (incomp_[a].intersects(s)) return false;
    return true;
}

bool Poset::is_antichain(const IndexSet& s) const {
    for (int a = s.first(); a >= 0; a = s.next(a)) {
        IndexSet rel = (up_[a] | down_[a]) & s;
        rel.reset(a);
        if (rel.any()) return false;
    }
    return true;
}

long Poset::incomparable_pair_count(const IndexSet& s) const {
    long twice = 0;
    for (int a = s.first(); a >= 0; a = s.next(a)) twice += (incomp_[a] & s).count();
    return twice / 2;
}

void Poset::validate() const {
    for (int a = 0; a < n_; ++a) {
        if (!up_[a].test(a)) throw IdentityViolation("order not reflexive at " + std::to_string(a));
        up_[a].for_each([&](int b) {
            if (a != b && up_[b].test(a))
                throw IdentityViolation("order not antisymmetric on {" + std::to_string(a) + "," +
                                        std::to_string(b) + "}");
            if (!up_[b].is_subset_of(up_[a]))
                throw IdentityViolation("order not transitive above " + std::to_string(a));
        });
    }
}

} // namespace rootposet
