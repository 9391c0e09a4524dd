#include "rootposet/root_poset.hpp"

#include <algorithm>

namespace rootposet {

RootPoset::RootPoset(const DynkinDiagram& d) : diagram_(d) {
    elements_ = positive_roots(d);
    heights_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        heights_.push_back(elements_[i].height());
        index_[elements_[i].coeffs] = int(i);
        max_height_ = std::max(max_height_, heights_.back());
    }

    const int n = int(elements_.size());
    order_ = Poset::from_leq(
        n, [&](int a, int b) { return elements_[a].leq(elements_[b]); });

    // graded covers: height difference one, difference a simple root
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (heights_[b] == heights_[a] + 1 && order_.leq(a, b)) {
                int simple = -1;
                for (int k = 0; k < diagram_.rank; ++k)
                    if (elements_[b].coeffs[k] == elements_[a].coeffs[k] + 1) simple = k;
                hasse_.push_back({a, b, simple});
            }
}

int RootPoset::index_of(const Root& r) const {
    auto it = index_.find(r.coeffs);
    return it == index_.end() ? -1 : it->second;
}

IndexSet RootPoset::level_set(int t) const {
    IndexSet s(size());
    for (int i = 0; i < size(); ++i)
        if (heights_[i] == t) s.set(i);
    return s;
}

int RootPoset::highest_root() const {
    IndexSet top = order_.maximal_elements(IndexSet::full(size()));
    if (top.count() != 1)
        throw IdentityViolation(diagram_.name() + ": highest root not unique");
    return top.first();
}

LevelProfile RootPoset::level_profile() const {
    LevelProfile p;
    const int n = diagram_.rank;
    if (2 * size() % n != 0)
        throw IdentityViolation(diagram_.name() + ": 2|Phi+| not divisible by rank");
    p.g = 2 * size() / n;
    p.r.assign(p.g, 0);
    for (int h : heights_) {
        if (h < 1 || h > p.g)
            throw IdentityViolation(diagram_.name() + ": root height outside [1, g]");
        p.r[h - 1] += 1;
    }
    if (p.r[0] != n) throw IdentityViolation(diagram_.name() + ": r(1) != rank");
    if (n >= 2 && p.r[p.g - 2] != 1)
        throw IdentityViolation(diagram_.name() + ": r(g-1) != 1");
    for (int i = 1; i <= p.g; ++i)
        if (p.at(i) + p.at(p.g - i + 1) != n)
            throw IdentityViolation(diagram_.name() + ": r(i) + r(g-i+1) != rank at i = " +
                                    std::to_string(i));
    p.h = 0;
    for (int i = 1; i <= p.g; ++i)
        if (p.at(i) == n - 1) p.h = i;
    return p;
}

RootPoset build_poset(const DynkinDiagram& d) { return RootPoset(d); }

} // namespace rootposet
