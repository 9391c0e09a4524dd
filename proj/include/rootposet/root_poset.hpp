#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootposet/dynkin.hpp"
#include "rootposet/poset.hpp"

namespace rootposet {

struct CoverEdge {
    int lo, hi;
    int simple; // node index of the added simple root
    bool operator==(const CoverEdge&) const = default;
};

// r(i) = number of roots of height i, 1-based conceptually; r.size() == g.
// Invariants (validated): r(1) = rank, r(g-1) = 1 for rank >= 2,
// and the symmetry r(i) + r(g-i+1) = rank for all i.
struct LevelProfile {
    std::vector<int> r;
    int g = 0; // Coxeter number 2|Phi+|/rank
    int h = 0; // largest i with r(i) = rank - 1

    int at(int i) const { return (i >= 1 && i <= g) ? r[i - 1] : 0; }
};

class RootPoset {
  public:
    explicit RootPoset(const DynkinDiagram& d);

    const DynkinDiagram& diagram() const { return diagram_; }
    const std::vector<Root>& elements() const { return elements_; }
    const Poset& order() const { return order_; }
    const std::vector<CoverEdge>& hasse() const { return hasse_; }

    int size() const { return int(elements_.size()); }
    int height(int i) const { return heights_[i]; }
    const Root& root(int i) const { return elements_[i]; }
    int index_of(const Root& r) const; // -1 when absent

    bool leq(int a, int b) const { return order_.leq(a, b); }

    IndexSet level_set(int t) const;                 // Phi_t (empty beyond the top)
    IndexSet ideal(const IndexSet& s) const { return order_.ideal(s); }
    IndexSet coideal(const IndexSet& s) const { return order_.coideal(s); }
    IndexSet incomparable_set(int z) const { return order_.incomparables(z); }
    IndexSet simple_roots() const { return level_set(1); }
    int highest_root() const; // unique maximum

    int max_height() const { return max_height_; }

    // throws IdentityViolation if the profile identities fail
    LevelProfile level_profile() const;

  private:
    DynkinDiagram diagram_;
    std::vector<Root> elements_;
    std::vector<int> heights_;
    Poset order_;
    std::vector<CoverEdge> hasse_;
    std::map<std::vector<int>, int> index_;
    int max_height_ = 0;
};

RootPoset build_poset(const DynkinDiagram& d);

} // namespace rootposet
