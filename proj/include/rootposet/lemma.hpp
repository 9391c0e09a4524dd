#pragma once

#include <string>
#include <vector>

#include "rootposet/antichains.hpp"
#include "rootposet/chains.hpp"
#include "rootposet/root_poset.hpp"

namespace rootposet {

// Certificate for the unique-maximal-antichain argument on a root poset with
// one basis element deleted. With P the poset on the surviving elements:
//   X = antichain with ideal I = ideal(X),  J = P minus I,  Y = minima of J,
//   I_chains / J_chains = minimum chain covers of I and J, chain k of I
//   topped by X[k], chain k of J bottomed by Y[k],
//   f, g = per-y pair of distinct X positions strictly below y whose edges
//   (y, f(y)), (y, g(y)) form a forest on X union Y.
struct LemmaWitness {
    std::string diagram;
    IndexSet deleted;              // removed up front; each lies below all of Y
    std::string deleted_node;      // basis node name of the removed element
    Antichain X, Y;
    std::vector<std::vector<int>> I_chains, J_chains;
    std::vector<int> f, g;         // positions into X, indexed like Y
};

struct HypothesisReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Re-checks every hypothesis of the witness from scratch.
HypothesisReport check_witness(const RootPoset& rp, const LemmaWitness& w);

struct ConclusionRecord {
    int width_P = 0;                  // width after deletion, must equal |X|
    bool unique_maximal = false;      // X is the unique maximal |X|-antichain
    int z_checked = 0;                // elements of J examined
    int max_incomparable_width = 0;   // largest width among their incomparable sets
    int glued_chain_count = 0;        // chains in each constructive cover
};

// Derives the conclusion: for every z in J the incomparables of z are covered
// by |X|-2 glued chains (constructed explicitly, then confirmed by branch and
// bound), so no z joins an |X|-antichain; the width equals |X| and X is the
// unique maximal antichain of that size. Throws ConclusionFailure at the first
// element where the argument breaks.
ConclusionRecord lemma_conclusion(const RootPoset& rp, const LemmaWitness& w);

// Builds a witness for the E6/E7/E8/F4 root posets deterministically: X is the
// unique maximal (rank-1)-antichain, the deleted element is a basis root lying
// below all of Y (the node named "c" when eligible), chain covers come from
// the matching-based minimum cover, and the (f, g) pairs are chosen greedily
// with backtracking, scanning Y by decreasing height. Throws WitnessNotFound
// when any stage fails, UnsupportedDiagram for other diagrams.
LemmaWitness find_witness(const RootPoset& rp);

}  // namespace rootposet
