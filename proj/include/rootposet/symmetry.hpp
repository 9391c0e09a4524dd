#pragma once

#include <vector>

#include "rootposet/poset.hpp"

namespace rootposet {

struct AutomorphismGroup {
    // every order automorphism of the masked subposet, identity first, sorted;
    // permutations are full-length and fix everything off the mask
    std::vector<std::vector<int>> elements;
    std::vector<std::vector<int>> generators;  // the non-identity elements

    long order() const { return static_cast<long>(elements.size()); }
};

// Complete enumeration of the order automorphisms of the subposet induced by
// the mask. The graded search prunes candidates by longest-chain grade inside
// the subposet; the unrestricted search prunes only by up/down degrees and is
// allowed on subposets of at most 40 elements, serving as a cross-check that
// grading loses nothing. The result is verified (bijections preserving the
// order both ways, closed under composition and inverse) before returning;
// violations throw IdentityViolation.
AutomorphismGroup automorphism_group(const Poset& p, const IndexSet& mask, bool graded = true);

// Permutation induced by the automorphism phi on the lexicographic list of
// t-antichains of the masked subposet. Throws VerificationFailure when phi
// fails to map that list onto itself.
struct InducedAction {
    std::vector<int> permutation;
    bool is_identity = true;
};
InducedAction induced_antichain_action(const Poset& p, const IndexSet& mask,
                                       const std::vector<int>& phi, int t);

}  // namespace rootposet
