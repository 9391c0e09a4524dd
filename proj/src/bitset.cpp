#include "rootposet/bitset.hpp"

#include <bit>
#include <cassert>

namespace rootposet {

IndexSet IndexSet::full(int universe) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
}

IndexSet IndexSet::of(int universe, std::initializer_list<int> bits) {
    IndexSet s(universe);
    for (int b : bits) s.set(b);
    return s;
}

void IndexSet::clear() {
    for (auto& w : w_) w = 0;
}

int IndexSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool IndexSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

IndexSet& IndexSet::operator&=(const IndexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

IndexSet& IndexSet::operator|=(const IndexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

IndexSet& IndexSet::subtract(const IndexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
}

IndexSet IndexSet::complement() const {
    IndexSet r = full(n_);
    r.subtract(*this);
    return r;
}

bool IndexSet::is_subset_of(const IndexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~o.w_[k]) return false;
    return true;
}

bool IndexSet::intersects(const IndexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & o.w_[k]) return true;
    return false;
}

int IndexSet::first() const { return next(-1); }

int IndexSet::next(int after) const {
    int i = after + 1;
    if (i >= n_) return -1;
    std::size_t k = std::size_t(i) >> 6;
    std::uint64_t w = w_[k] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++k; k < w_.size(); ++k)
        if (w_[k]) return int(k << 6) + std::countr_zero(w_[k]);
    return -1;
}

std::vector<int> IndexSet::to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
}

} // namespace rootposet
