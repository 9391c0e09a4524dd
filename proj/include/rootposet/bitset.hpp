#pragma once

#include <cstdint>
#include <vector>

namespace rootposet {

// Dynamic fixed-universe bitset used for element subsets of a poset.
// Indices run over [0, universe()); all binary operations require equal universes.
class IndexSet {
  public:
    IndexSet() = default;
    explicit IndexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static IndexSet full(int universe);
    static IndexSet of(int universe, std::initializer_list<int> bits);

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear();

    int count() const;
    bool empty() const;
    bool any() const { return !empty(); }

    IndexSet& operator&=(const IndexSet& o);
    IndexSet& operator|=(const IndexSet& o);
    IndexSet& subtract(const IndexSet& o); // this &= ~o
    IndexSet complement() const;           // within the universe

    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

    bool operator==(const IndexSet& o) const = default;

    bool is_subset_of(const IndexSet& o) const;
    bool intersects(const IndexSet& o) const;

    // -1 when exhausted
    int first() const;
    int next(int after) const;

    std::vector<int> to_vector() const;

    template <class F>
    void for_each(F&& f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace rootposet
