#include "rootposet/report.hpp"

#include <sstream>

#include "rootposet/chains.hpp"
#include "rootposet/errors.hpp"
#include "rootposet/lemma.hpp"
#include "rootposet/symmetry.hpp"

namespace rootposet {

DiagramReport diagram_report(const DynkinDiagram& d) {
    DiagramReport rep;
    rep.diagram = d.name();
    auto guard = [&](const char* stage, const std::function<void()>& run) {
        try {
            run();
        } catch (const std::exception& e) {
            rep.failures.push_back(std::string(stage) + ": " + e.what());
        }
    };

    std::optional<RootPoset> poset;
    guard("build", [&] { poset.emplace(d); });
    if (!poset) return rep;
    const RootPoset& rp = *poset;
    IndexSet full = IndexSet::full(rp.size());

    guard("theorem", [&] {
        rep.theorem = check_main_theorem(rp);
        for (const std::string& f : rep.theorem.failures) rep.failures.push_back("theorem: " + f);
    });
    guard("profile", [&] {
        rep.profile = rp.level_profile();
        rep.profile_ok = true;
    });
    guard("levels", [&] {
        if (!has_published_table(d)) return;
        rep.has_table = true;
        rep.table_warnings = verify_level_table(rp).warnings;
    });
    guard("antichains", [&] {
        rep.distribution = size_distribution(rp.order(), full);
        const auto& counts = rep.distribution.counts;
        rep.distribution_symmetric = true;
        for (size_t t = 0; t < counts.size(); ++t)
            if (counts[t] != counts[counts.size() - 1 - t]) rep.distribution_symmetric = false;
        if (!rep.distribution_symmetric) rep.failures.push_back("antichains: skewed distribution");
        int n = d.rank;
        rep.count_identity = static_cast<int>(counts.size()) == n + 1 &&
                             counts[static_cast<size_t>(n - 1)] == rp.size();
        if (!rep.count_identity)
            rep.failures.push_back("antichains: count of (n-1)-antichains differs from the size");
    });
    guard("width", [&] {
        rep.width_value = width(rp.order(), full).width;
        rep.width_is_rank = rep.width_value == d.rank;
        if (!rep.width_is_rank) rep.failures.push_back("width: not equal to the rank");
        rep.dilworth_match =
            static_cast<int>(min_chain_cover(rp.order(), full).chains.size()) == rep.width_value;
        if (!rep.dilworth_match) rep.failures.push_back("width: chain cover disagrees");
        std::vector<Antichain> basis = enumerate_antichains(rp.order(), full, d.rank);
        rep.basis_unique_antichain =
            basis.size() == 1 && basis.front() == rp.simple_roots().to_vector();
        if (!rep.basis_unique_antichain)
            rep.failures.push_back("width: full-rank antichain is not the basis alone");
    });
    if (d.family == Family::E || (d.family == Family::F && d.rank == 4)) {
        guard("lemma", [&] {
            LemmaWitness w = find_witness(rp);
            HypothesisReport hyp = check_witness(rp, w);
            if (!hyp.ok()) throw VerificationFailure(hyp.failures.front());
            lemma_conclusion(rp, w);
            rep.lemma_ok = true;
        });
        if (!rep.lemma_ok.has_value()) rep.lemma_ok = false;
    }
    guard("symmetry", [&] {
        rep.automorphism_order = automorphism_group(rp.order(), full).order();
    });
    return rep;
}

FullReport full_report(const std::vector<DynkinDiagram>& diagrams) {
    FullReport rep;
    for (const DynkinDiagram& d : diagrams) {
        if (d.rank > 8)
            rep.warnings.push_back(d.name() + ": rank above 8 is outside the verified range");
        rep.items.push_back(diagram_report(d));
        const DiagramReport& item = rep.items.back();
        for (const LevelWarning& w : item.table_warnings) {
            std::ostringstream os;
            os << item.diagram << " level " << w.level << ": published " << w.field << " "
               << w.published << " corrected to " << w.corrected;
            rep.warnings.push_back(os.str());
        }
        if (!item.ok()) rep.pass = false;
    }
    return rep;
}

std::string render_text(const FullReport& rep) {
    std::ostringstream os;
    for (const DiagramReport& item : rep.items) {
        os << item.diagram << ": " << (item.ok() ? "pass" : "FAIL");
        if (item.profile_ok) os << "  g=" << item.profile.g << " h=" << item.profile.h;
        os << " width=" << item.width_value;
        os << " antichains=" << item.distribution.total();
        if (item.lemma_ok) os << " lemma=" << (*item.lemma_ok ? "ok" : "FAIL");
        if (item.automorphism_order) os << " aut=" << *item.automorphism_order;
        if (item.has_table) os << " table_warnings=" << item.table_warnings.size();
        os << "\n";
        for (const std::string& f : item.failures) os << "  failure: " << f << "\n";
    }
    for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
    os << (rep.pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

std::vector<DynkinDiagram> default_diagram_set() {
    std::vector<DynkinDiagram> out;
    for (int n = 2; n <= 8; ++n) out.push_back(dynkin(Family::A, n));
    for (int n = 2; n <= 8; ++n) out.push_back(dynkin(Family::B, n));
    for (int n = 2; n <= 8; ++n) out.push_back(dynkin(Family::C, n));
    for (int n = 4; n <= 8; ++n) out.push_back(dynkin(Family::D, n));
    for (int n = 6; n <= 8; ++n) out.push_back(dynkin(Family::E, n));
    out.push_back(dynkin(Family::F, 4));
    out.push_back(dynkin(Family::G, 2));
    return out;
}

}  // namespace rootposet
