#include "rootposet/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "rootposet/errors.hpp"

namespace rootposet {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string coeff_string(const Root& r) {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < r.coeffs.size(); ++k) {
        if (k) os << ',';
        os << r.coeffs[k];
    }
    os << ')';
    return os.str();
}

}  // namespace

std::string export_json(const RootPoset& rp) {
    const DynkinDiagram& d = rp.diagram();
    ordered_json doc;
    doc["diagram"] = d.name();

    ordered_json elements = ordered_json::array();
    for (int e = 0; e < rp.size(); ++e) {
        ordered_json el;
        el["id"] = e;
        el["coeffs"] = rp.root(e).coeffs;
        el["height"] = rp.height(e);
        elements.push_back(std::move(el));
    }
    doc["elements"] = std::move(elements);

    ordered_json covers = ordered_json::array();
    for (const CoverEdge& c : rp.hasse()) {
        ordered_json edge;
        edge["lo"] = c.lo;
        edge["hi"] = c.hi;
        edge["simple"] = d.node_names[static_cast<size_t>(c.simple)];
        covers.push_back(std::move(edge));
    }
    doc["covers"] = std::move(covers);

    LevelProfile profile = rp.level_profile();
    ordered_json levels;
    levels["r"] = profile.r;
    levels["g"] = profile.g;
    levels["h"] = profile.h;
    doc["levels"] = std::move(levels);

    return doc.dump(2) + "\n";
}

RootPoset import_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw VerificationFailure(std::string("malformed document: ") + e.what());
    }
    auto fail = [](const std::string& what) -> RootPoset {
        throw VerificationFailure("document mismatch: " + what);
    };

    if (!doc.contains("diagram") || !doc["diagram"].is_string()) return fail("diagram token");
    RootPoset rp = build_poset(parse_diagram(doc["diagram"].get<std::string>()));
    const DynkinDiagram& d = rp.diagram();

    const auto& elements = doc["elements"];
    if (!elements.is_array() || static_cast<int>(elements.size()) != rp.size())
        return fail("element count");
    for (int e = 0; e < rp.size(); ++e) {
        const auto& el = elements[static_cast<size_t>(e)];
        if (el["id"].get<int>() != e) return fail("element ids must be 0..n-1 in order");
        if (el["coeffs"].get<std::vector<int>>() != rp.root(e).coeffs)
            return fail("coefficients of element " + std::to_string(e));
        if (el["height"].get<int>() != rp.height(e))
            return fail("height of element " + std::to_string(e));
    }

    const auto& covers = doc["covers"];
    if (!covers.is_array() || covers.size() != rp.hasse().size()) return fail("cover count");
    for (size_t k = 0; k < rp.hasse().size(); ++k) {
        const CoverEdge& c = rp.hasse()[k];
        const auto& edge = covers[k];
        if (edge["lo"].get<int>() != c.lo || edge["hi"].get<int>() != c.hi ||
            edge["simple"].get<std::string>() != d.node_names[static_cast<size_t>(c.simple)])
            return fail("cover " + std::to_string(k));
    }

    LevelProfile profile = rp.level_profile();
    const auto& levels = doc["levels"];
    if (levels["r"].get<std::vector<int>>() != profile.r || levels["g"].get<int>() != profile.g ||
        levels["h"].get<int>() != profile.h)
        return fail("level profile");

    return rp;
}

std::string export_dot(const RootPoset& rp) {
    const DynkinDiagram& d = rp.diagram();
    std::ostringstream os;
    os << "digraph \"" << d.name() << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontsize=10];\n";
    for (int e = 0; e < rp.size(); ++e)
        os << "  r" << e << " [label=\"" << coeff_string(rp.root(e)) << "\"];\n";
    for (const CoverEdge& c : rp.hasse())
        os << "  r" << c.lo << " -> r" << c.hi << " [label=\""
           << d.node_names[static_cast<size_t>(c.simple)] << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_tikz(const RootPoset& rp) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[x=1.4cm, y=1.2cm]\n";

    std::vector<int> level_seen(static_cast<size_t>(rp.max_height() + 1), 0);
    std::vector<int> level_size(static_cast<size_t>(rp.max_height() + 1), 0);
    for (int e = 0; e < rp.size(); ++e) ++level_size[static_cast<size_t>(rp.height(e))];

    char buf[64];
    for (int e = 0; e < rp.size(); ++e) {
        int h = rp.height(e);
        int idx = level_seen[static_cast<size_t>(h)]++;
        double x = idx - (level_size[static_cast<size_t>(h)] - 1) / 2.0;
        std::snprintf(buf, sizeof buf, "%.1f", x);
        os << "  \\node[inner sep=1pt, font=\\tiny] (r" << e << ") at (" << buf << ", " << h
           << ") {" << coeff_string(rp.root(e)) << "};\n";
    }
    for (const CoverEdge& c : rp.hasse())
        os << "  \\draw[gray] (r" << c.lo << ") -- (r" << c.hi << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace rootposet
