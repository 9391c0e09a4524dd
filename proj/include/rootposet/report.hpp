#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootposet/antichains.hpp"
#include "rootposet/level_tables.hpp"

namespace rootposet {

// Everything checked for one diagram. Failures are collected, never thrown,
// so a full run always produces a complete report.
struct DiagramReport {
    std::string diagram;

    TheoremReport theorem;
    bool profile_ok = false;  // height profile identities
    LevelProfile profile;

    bool has_table = false;
    std::vector<LevelWarning> table_warnings;  // published data corrected on the fly

    SizeDistribution distribution;
    bool distribution_symmetric = false;  // |A_t| == |A_{n-t}|
    bool count_identity = false;          // number of (n-1)-antichains == poset size

    int width_value = 0;
    bool width_is_rank = false;
    bool dilworth_match = false;              // chain-cover size == width
    bool basis_unique_antichain = false;      // the only n-antichain is the basis

    std::optional<bool> lemma_ok;             // exceptional diagrams only
    std::optional<long> automorphism_order;

    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

DiagramReport diagram_report(const DynkinDiagram& d);

struct FullReport {
    std::vector<DiagramReport> items;
    std::vector<std::string> warnings;  // published-table corrections, rank advisories
    bool pass = true;                   // no failures anywhere (warnings allowed)
};

// Runs every diagram, collecting failures instead of aborting.
FullReport full_report(const std::vector<DynkinDiagram>& diagrams);

std::string render_text(const FullReport& rep);

// A2..A8, B2..B8, C2..C8, D4..D8, E6, E7, E8, F4, G2
std::vector<DynkinDiagram> default_diagram_set();

}  // namespace rootposet
