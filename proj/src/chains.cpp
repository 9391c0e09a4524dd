#include "rootposet/chains.hpp"

#include <algorithm>
#include <functional>

namespace rootposet {

int ChainCover::chain_of(int element) const {
    for (size_t k = 0; k < chains.size(); ++k)
        for (int e : chains[k])
            if (e == element) return static_cast<int>(k);
    return -1;
}

ChainCover min_chain_cover(const Poset& p, const IndexSet& subset) {
    std::vector<int> elems = subset.to_vector();
    int m = static_cast<int>(elems.size());

    // next[u] = matched successor of u inside the subset, -1 when u is a top
    std::vector<int> next(static_cast<size_t>(m), -1), prev(static_cast<size_t>(m), -1);
    std::vector<bool> visited;
    std::function<bool(int)> augment = [&](int u) {
        for (int v = 0; v < m; ++v) {
            if (visited[static_cast<size_t>(v)] || !p.less(elems[static_cast<size_t>(u)], elems[static_cast<size_t>(v)]))
                continue;
            visited[static_cast<size_t>(v)] = true;
            if (prev[static_cast<size_t>(v)] < 0 || augment(prev[static_cast<size_t>(v)])) {
                prev[static_cast<size_t>(v)] = u;
                next[static_cast<size_t>(u)] = v;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < m; ++u) {
        visited.assign(static_cast<size_t>(m), false);
        augment(u);
    }

    ChainCover cover;
    for (int u = 0; u < m; ++u) {
        if (prev[static_cast<size_t>(u)] >= 0) continue;  // not a chain bottom
        std::vector<int> chain;
        for (int v = u; v >= 0; v = next[static_cast<size_t>(v)])
            chain.push_back(elems[static_cast<size_t>(v)]);
        cover.chains.push_back(std::move(chain));
    }
    return cover;
}

}  // namespace rootposet
