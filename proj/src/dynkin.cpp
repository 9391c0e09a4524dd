#include "rootposet/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace rootposet {

namespace {

std::string chain_letter(int pos) {
    // pos 0 = 'a'; synthetic names past 'z' (ranks above 26 are legal input)
    if (pos < 26) return std::string(1, char('a' + pos));
    return "n" + std::to_string(pos);
}

std::vector<std::vector<int>> identity2(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    return m;
}

void bond(std::vector<std::vector<int>>& c, int i, int j, int down_ij = -1, int down_ji = -1) {
    c[i][j] = down_ij;
    c[j][i] = down_ji;
}

} // namespace

int DynkinDiagram::node_index(const std::string& n) const {
    for (std::size_t i = 0; i < node_names.size(); ++i)
        if (node_names[i] == n) return int(i);
    return -1;
}

DynkinDiagram dynkin(Family family, int rank) {
    auto bad = [&](const char* why) {
        throw UnsupportedDiagram(std::string(1, char(family)) + std::to_string(rank) + ": " + why);
    };
    DynkinDiagram d;
    d.family = family;
    d.rank = rank;
    if (rank < 1) bad("rank must be positive");
    d.cartan = identity2(rank);
    d.node_names.resize(rank);

    switch (family) {
    case Family::A: {
        for (int i = 0; i < rank; ++i) d.node_names[i] = chain_letter(i);
        for (int i = 0; i + 1 < rank; ++i) {
            bond(d.cartan, i, i + 1);
            d.edges.push_back({i, i + 1});
        }
        break;
    }
    case Family::B:
    case Family::C: {
        if (rank < 2) bad("rank must be at least 2");
        for (int i = 0; i < rank; ++i) d.node_names[i] = chain_letter(rank - 1 - i);
        for (int i = 0; i + 1 < rank; ++i) d.edges.push_back({i, i + 1});
        for (int i = 0; i + 2 < rank; ++i) bond(d.cartan, i, i + 1);
        // double bond b--a at the end; the short root's row carries the -2
        if (family == Family::B)
            bond(d.cartan, rank - 2, rank - 1, -1, -2); // a short
        else
            bond(d.cartan, rank - 2, rank - 1, -2, -1); // a long
        break;
    }
    case Family::D: {
        if (rank < 4) bad("rank must be at least 4");
        for (int i = 0; i + 1 < rank; ++i) d.node_names[i] = chain_letter(rank - 2 - i);
        d.node_names[rank - 1] = "u";
        for (int i = 0; i + 2 < rank; ++i) {
            bond(d.cartan, i, i + 1);
            d.edges.push_back({i, i + 1});
        }
        bond(d.cartan, rank - 3, rank - 1);
        d.edges.push_back({rank - 3, rank - 1});
        break;
    }
    case Family::E: {
        if (rank < 6 || rank > 8) bad("rank must be 6, 7 or 8");
        for (int i = 0; i + 1 < rank; ++i) d.node_names[i] = chain_letter(i);
        d.node_names[rank - 1] = "u";
        for (int i = 0; i + 2 < rank; ++i) {
            bond(d.cartan, i, i + 1);
            d.edges.push_back({i, i + 1});
        }
        bond(d.cartan, 2, rank - 1);
        d.edges.push_back({2, rank - 1});
        break;
    }
    case Family::F: {
        if (rank != 4) bad("rank must be 4");
        for (int i = 0; i < 4; ++i) d.node_names[i] = chain_letter(i);
        for (int i = 0; i + 1 < 4; ++i) d.edges.push_back({i, i + 1});
        bond(d.cartan, 0, 1);
        bond(d.cartan, 1, 2, -2, -1); // b short, c long
        bond(d.cartan, 2, 3);
        break;
    }
    case Family::G: {
        if (rank != 2) bad("rank must be 2");
        d.node_names = {"a", "b"};
        d.edges.push_back({0, 1});
        bond(d.cartan, 0, 1, -3, -1); // a short
        break;
    }
    default:
        bad("unknown family");
    }
    return d;
}

DynkinDiagram parse_diagram(const std::string& token) {
    if (token.size() < 2) throw UnsupportedDiagram("malformed diagram token: " + token);
    char f = char(std::toupper(static_cast<unsigned char>(token[0])));
    if (std::string("ABCDEFG").find(f) == std::string::npos)
        throw UnsupportedDiagram("unknown family in token: " + token);
    int rank = 0;
    for (std::size_t k = 1; k < token.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(token[k])))
            throw UnsupportedDiagram("malformed rank in token: " + token);
        rank = rank * 10 + (token[k] - '0');
        if (rank > 1000) throw UnsupportedDiagram("rank out of range in token: " + token);
    }
    return dynkin(Family(f), rank);
}

std::vector<Root> positive_roots(const DynkinDiagram& d) {
    const int n = d.rank;
    std::map<std::vector<int>, int> seen; // coeffs -> height
    std::vector<std::vector<Root>> layers;

    layers.emplace_back();
    for (int i = 0; i < n; ++i) {
        Root r{std::vector<int>(n, 0)};
        r.coeffs[i] = 1;
        seen[r.coeffs] = 1;
        layers.back().push_back(std::move(r));
    }
    std::sort(layers.back().begin(), layers.back().end(),
              [](const Root& a, const Root& b) { return a.coeffs < b.coeffs; });

    while (!layers.back().empty()) {
        std::vector<Root> next;
        const int h = int(layers.size());
        for (const Root& beta : layers.back()) {
            for (int i = 0; i < n; ++i) {
                // p = how far the alpha_i string extends below beta
                int p = 0;
                std::vector<int> down = beta.coeffs;
                for (;;) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta.coeffs[j] * d.cartan[i][j];
                if (p - pairing > 0) {
                    std::vector<int> up = beta.coeffs;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen[up] = h + 1;
                        next.push_back(Root{up});
                    }
                }
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const Root& a, const Root& b) { return a.coeffs < b.coeffs; });
        layers.push_back(std::move(next));
    }

    std::vector<Root> all;
    for (auto& layer : layers)
        for (auto& r : layer) all.push_back(std::move(r));
    return all;
}

long expected_root_count(Family family, int rank) {
    long n = rank;
    switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E:
        if (rank == 6) return 36;
        if (rank == 7) return 63;
        if (rank == 8) return 120;
        return -1;
    case Family::F: return rank == 4 ? 24 : -1;
    case Family::G: return rank == 2 ? 6 : -1;
    }
    return -1;
}

} // namespace rootposet
