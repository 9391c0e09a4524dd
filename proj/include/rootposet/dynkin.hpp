#pragma once

#include <string>
#include <vector>

#include "rootposet/errors.hpp"

namespace rootposet {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Positive root written in the basis of simple roots; coeffs[i] belongs to node i
// of the diagram's internal order.
struct Root {
    std::vector<int> coeffs;

    int height() const {
        int h = 0;
        for (int c : coeffs) h += c;
        return h;
    }
    bool operator==(const Root&) const = default;
    // componentwise difference test: *this <= o in the root order
    bool leq(const Root& o) const {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] > o.coeffs[k]) return false;
        return true;
    }
};

// Internal node order:
//   A_n : chain a, b, c, ...                       (index 0 = a)
//   B_n / C_n : chain ..., c, b, a                 (index n-1 = a, the double-bond end;
//                                                   B: a short, C: a long)
//   D_n : chain ..., c, b, a then u                (u = index n-1, attached to b = index n-3)
//   E_n : chain a..e(,f,g) then u                  (u = index n-1, attached to c = index 2)
//   F_4 : a, b, c, d — double bond b/c, a and b short
//   G_2 : a, b — triple bond, a short
struct DynkinDiagram {
    Family family;
    int rank;
    std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::string> node_names;
    std::vector<std::pair<int, int>> edges; // bonds (unordered pairs, lo < hi)

    std::string name() const { return std::string(1, char(family)) + std::to_string(rank); }
    bool operator==(const DynkinDiagram&) const = default;

    int node_index(const std::string& name) const; // -1 when absent
};

// Throws UnsupportedDiagram for ranks outside the family's domain
// (A>=1, B/C>=2, D>=4, E in {6,7,8}, F=4, G=2).
DynkinDiagram dynkin(Family family, int rank);

// "E6" / "a7" style token -> diagram. Throws UnsupportedDiagram on malformed input.
DynkinDiagram parse_diagram(const std::string& token);

// All positive roots by the root-string closure, sorted by (height, lex on coeffs).
// beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p is the largest k
// with beta - k*alpha_i a root.
std::vector<Root> positive_roots(const DynkinDiagram& d);

// |Phi+| from the closed forms where one exists; -1 for no closed form.
long expected_root_count(Family family, int rank);

} // namespace rootposet
