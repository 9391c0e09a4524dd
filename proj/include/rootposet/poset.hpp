#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rootposet/bitset.hpp"
#include "rootposet/errors.hpp"

namespace rootposet {

// Finite poset on indices 0..size-1 stored as closed relation rows.
class Poset {
  public:
    Poset() = default;

    // leq must already be reflexive, antisymmetric and transitive; validated.
    static Poset from_leq(int n, const std::function<bool(int, int)>& leq);

    // reflexive-transitive closure of the given strict relations; antisymmetry validated
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less_than);

    int size() const { return n_; }

    bool leq(int a, int b) const { return up_[a].test(b); }
    bool less(int a, int b) const { return a != b && up_[a].test(b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    const IndexSet& up(int a) const { return up_[a]; }     // {b : a <= b}
    const IndexSet& down(int a) const { return down_[a]; } // {b : b <= a}
    const IndexSet& incomparables(int a) const { return incomp_[a]; }

    // order ideal / coideal generated by s (contains s)
    IndexSet ideal(const IndexSet& s) const;
    IndexSet coideal(const IndexSet& s) const;

    IndexSet minimal_elements(const IndexSet& within) const;
    IndexSet maximal_elements(const IndexSet& within) const;

    // transitive reduction, pairs (lo, hi) sorted by (lo, hi)
    std::vector<std::pair<int, int>> cover_pairs() const;

    // longest-chain-below grade per element (minimal elements get 0)
    std::vector<int> grades() const;

    bool is_chain(const IndexSet& s) const;
    bool is_antichain(const IndexSet& s) const;
    long incomparable_pair_count(const IndexSet& s) const;

    // throws IdentityViolation when the stored relation is not a partial order
    void validate() const;

  private:
    int n_ = 0;
    std::vector<IndexSet> up_, down_, incomp_;

    void finish_rows(); // fills down_/incomp_ from up_
};

} // namespace rootposet
