#pragma once

#include <string>
#include <vector>

#include "rootposet/root_poset.hpp"

namespace rootposet {

// One conjunct of a published level-membership condition: the coefficient of
// the named node compared against a bound.
struct CondAtom {
    std::string node;
    char rel; // '=' equal, '<' at most, '>' at least
    int bound;
    bool operator==(const CondAtom&) const = default;
};

enum class MinimaKind {
    Explicit,     // listed coefficient vectors
    ChainSimples, // the simple roots on the letter chain (u excluded when present)
};

// Published data for one level. Coefficient vectors are given in the diagram's
// internal node order (chain letters first, then u when the diagram has one).
struct PublishedLevel {
    std::vector<CondAtom> condition;
    MinimaKind minima_kind = MinimaKind::Explicit;
    std::vector<std::vector<int>> minima; // used when minima_kind == Explicit
    std::vector<int> maximum;
    long count = 0;
};

struct PublishedTable {
    Family family;
    int rank = 0;
    std::vector<PublishedLevel> levels;
};

// Tables exist for D_n (any rank >= 4), E6, E7, E8 and F4.
bool has_published_table(const DynkinDiagram& d);
PublishedTable published_table(const DynkinDiagram& d); // throws UnsupportedDiagram otherwise

// A published datum that disagrees with the rebuilt decomposition but sits on
// the known-erratum list; `corrected` is the value forced by the other columns.
struct LevelWarning {
    int level = 0;         // 1-based
    std::string field;     // "condition" or "maximum"
    std::string published;
    std::string corrected;
};

struct LevelDecomposition {
    std::vector<IndexSet> levels; // level k = levels[k-1]
    std::vector<LevelWarning> warnings;

    int level_of(int element) const; // 1-based; 0 when in no level
};

// Rebuilds the decomposition from the published minima (top level first, each
// lower level excluding the ones above it) and checks every published datum
// against the result: the levels partition the poset, the counts match, each
// level's minimal elements and unique maximal element match, and the membership
// condition cuts out the level either exactly or exactly after removing higher
// levels. A disagreement on the known-erratum list becomes a warning carrying
// the forced correction; any other disagreement throws VerificationFailure.
LevelDecomposition verify_level_table(const RootPoset& rp);

// Table-style rendering: "b >= 2, c = 1" and "(1 2 3 2 1 | u = 2)".
std::string render_condition(const std::vector<CondAtom>& atoms);
std::string render_vector(const DynkinDiagram& d, const std::vector<int>& coeffs);

} // namespace rootposet
