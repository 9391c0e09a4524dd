#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rootposet/root_poset.hpp"

namespace rootposet {

using Antichain = std::vector<int>; // strictly increasing element indices

// Antichains of the subposet induced by mask, in lexicographic order on index
// vectors; the empty antichain comes first. size restricts to exactly that many
// elements when given.
void for_each_antichain(const Poset& p, const IndexSet& mask, std::optional<int> size,
                        const std::function<void(const Antichain&)>& sink);

std::vector<Antichain> enumerate_antichains(const Poset& p, const IndexSet& mask,
                                            std::optional<int> size = std::nullopt);

// counts[t] = number of t-antichains, t = 0..width
struct SizeDistribution {
    std::vector<long> counts;
    long total() const {
        long s = 0;
        for (long c : counts) s += c;
        return s;
    }
};
SizeDistribution size_distribution(const Poset& p, const IndexSet& mask);

// maximum antichain size with one witness (branch and bound)
struct WidthResult {
    int width = 0;
    Antichain witness;
};
WidthResult width(const Poset& p, const IndexSet& mask);
int width_through(const Poset& p, const IndexSet& mask, int element); // max antichain containing it

// every element of a has an upper bound in b (sizes must agree for the maximal-antichain order)
bool dominated_by(const Poset& p, const Antichain& a, const Antichain& b);

// t-antichains not lying in the ideal of any other t-antichain
std::vector<Antichain> maximal_antichains_of_size(const Poset& p, const IndexSet& mask, int t);

struct TheoremReport {
    std::string diagram;
    int h = 0;
    int expected_h = 0;                      // A:2 B/C/D:3 E6:4 E7:5 E8:7 F4:5 G2:5
    bool h_matches = false;
    bool phi_h_is_antichain = false;
    long antichain_count = 0;                // number of (n-1)-antichains
    std::vector<Antichain> maximal_list;     // maximal (n-1)-antichains
    bool unique_maximal = false;
    bool equals_phi_h = false;               // the unique maximal one is Phi_h (non-E6 clause)
    bool all_dominated = false;              // every (n-1)-antichain dominated by the maximal one
    struct E6Exception {
        bool phi_h_not_maximal = false;
        bool heights_are_h_and_h1 = false;   // maximal antichain uses heights h and h+1 only, both present
        bool inside_phi_h_union_h1 = false;
        bool others_in_ideal_phi_h = false;  // every other (n-1)-antichain lies in ideal(Phi_h)
    };
    std::optional<E6Exception> e6;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Main theorem, all clauses, brute force; never throws on clause failure
TheoremReport check_main_theorem(const RootPoset& rp);

// throws VerificationFailure carrying the first failed clause
void verify_main_theorem(const RootPoset& rp);

int expected_theorem_h(Family f);

} // namespace rootposet
