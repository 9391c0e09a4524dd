#pragma once

#include <string>

#include "rootposet/root_poset.hpp"

namespace rootposet {

// JSON document with the diagram token, the elements (id, coefficient vector,
// height), the labeled cover relations and the height-level profile. Output is
// deterministic: fixed key order, elements by id, covers as stored.
std::string export_json(const RootPoset& rp);

// Rebuilds the poset named in the document and verifies every stored field
// against it; any disagreement throws VerificationFailure, so a successful
// import proves the document is a faithful description.
RootPoset import_json(const std::string& text);

// Hasse diagram as a DOT digraph, edges labeled by the added basis node.
std::string export_dot(const RootPoset& rp);

// TikZ picture of the Hasse diagram; an element sits at x = position within
// its height level (centered), y = height.
std::string export_tikz(const RootPoset& rp);

}  // namespace rootposet
