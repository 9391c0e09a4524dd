#pragma once

#include <vector>

#include "rootposet/poset.hpp"

namespace rootposet {

struct ChainCover {
    // pairwise disjoint chains covering the subset, each listed bottom to top
    std::vector<std::vector<int>> chains;

    int chain_of(int element) const;  // index into chains, -1 when absent
};

// Minimum chain cover of the subset via maximum bipartite matching on the
// strict order; the number of chains equals the width. Deterministic: elements
// are scanned in index order.
ChainCover min_chain_cover(const Poset& p, const IndexSet& subset);

}  // namespace rootposet
