#include "rootposet/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rootposet/antichains.hpp"
#include "rootposet/errors.hpp"

namespace rootposet {

namespace {

// longest-chain-below grades inside the masked subposet
std::vector<int> grades_within(const Poset& p, const IndexSet& mask) {
    std::vector<int> elems = mask.to_vector();
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        if (p.down(a).count() != p.down(b).count()) return p.down(a).count() < p.down(b).count();
        return a < b;
    });
    std::vector<int> grade(static_cast<size_t>(p.size()), 0);
    for (int v : elems)
        for (int w : elems) {
            if (w == v) break;
            if (p.less(w, v)) grade[static_cast<size_t>(v)] =
                std::max(grade[static_cast<size_t>(v)], grade[static_cast<size_t>(w)] + 1);
        }
    return grade;
}

void check_permutation(const Poset& p, const IndexSet& mask, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != p.size())
        throw IdentityViolation("automorphism has the wrong length");
    std::vector<bool> hit(phi.size(), false);
    for (int v = 0; v < p.size(); ++v) {
        int w = phi[static_cast<size_t>(v)];
        if (w < 0 || w >= p.size() || hit[static_cast<size_t>(w)])
            throw IdentityViolation("automorphism is not a permutation");
        hit[static_cast<size_t>(w)] = true;
        if (mask.test(v) != mask.test(w) || (!mask.test(v) && w != v))
            throw IdentityViolation("automorphism moves elements across the mask");
    }
    for (int a = mask.first(); a >= 0; a = mask.next(a))
        for (int b = mask.first(); b >= 0; b = mask.next(b))
            if (p.leq(a, b) != p.leq(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]))
                throw IdentityViolation("automorphism fails to preserve the order");
}

void verify_group(const Poset& p, const IndexSet& mask, const AutomorphismGroup& g) {
    for (const auto& phi : g.elements) check_permutation(p, mask, phi);
    auto member = [&](const std::vector<int>& phi) {
        return std::binary_search(g.elements.begin(), g.elements.end(), phi);
    };
    for (const auto& phi : g.elements) {
        std::vector<int> inv(phi.size());
        for (size_t v = 0; v < phi.size(); ++v) inv[static_cast<size_t>(phi[v])] = static_cast<int>(v);
        if (!member(inv)) throw IdentityViolation("automorphism set lacks an inverse");
        for (const auto& psi : g.elements) {
            std::vector<int> comp(phi.size());
            for (size_t v = 0; v < phi.size(); ++v)
                comp[v] = phi[static_cast<size_t>(psi[v])];
            if (!member(comp)) throw IdentityViolation("automorphism set is not closed");
        }
    }
}

}  // namespace

AutomorphismGroup automorphism_group(const Poset& p, const IndexSet& mask, bool graded) {
    int m = mask.count();
    if (!graded && m > 40)
        throw VerificationFailure("unrestricted automorphism search is capped at 40 elements");

    std::vector<int> elems = mask.to_vector();
    std::vector<int> grade = grades_within(p, mask);
    auto updeg = [&](int v) { return (p.up(v) & mask).count() - 1; };
    auto downdeg = [&](int v) { return (p.down(v) & mask).count() - 1; };

    auto compatible = [&](int v, int w) {
        if (updeg(v) != updeg(w) || downdeg(v) != downdeg(w)) return false;
        if (graded && grade[static_cast<size_t>(v)] != grade[static_cast<size_t>(w)]) return false;
        return true;
    };

    std::vector<int> image(static_cast<size_t>(p.size()));
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(static_cast<size_t>(p.size()), false);
    AutomorphismGroup group;

    std::function<void(size_t)> place = [&](size_t pos) {
        if (pos == elems.size()) {
            group.elements.push_back(image);
            return;
        }
        int v = elems[pos];
        for (int w : elems) {
            if (used[static_cast<size_t>(w)] || !compatible(v, w)) continue;
            bool ok = true;
            for (size_t k = 0; k < pos && ok; ++k) {
                int v2 = elems[k], w2 = image[static_cast<size_t>(v2)];
                ok = p.leq(v, v2) == p.leq(w, w2) && p.leq(v2, v) == p.leq(w2, w);
            }
            if (!ok) continue;
            used[static_cast<size_t>(w)] = true;
            image[static_cast<size_t>(v)] = w;
            place(pos + 1);
            used[static_cast<size_t>(w)] = false;
        }
        image[static_cast<size_t>(v)] = v;
    };
    place(0);

    std::sort(group.elements.begin(), group.elements.end());
    std::vector<int> identity(static_cast<size_t>(p.size()));
    std::iota(identity.begin(), identity.end(), 0);
    for (const auto& phi : group.elements)
        if (!(phi == identity)) group.generators.push_back(phi);
    verify_group(p, mask, group);
    return group;
}

InducedAction induced_antichain_action(const Poset& p, const IndexSet& mask,
                                       const std::vector<int>& phi, int t) {
    std::vector<Antichain> list = enumerate_antichains(p, mask, t);
    std::map<Antichain, int> index;
    for (size_t k = 0; k < list.size(); ++k) index[list[k]] = static_cast<int>(k);

    InducedAction action;
    action.permutation.resize(list.size());
    for (size_t k = 0; k < list.size(); ++k) {
        Antichain image;
        for (int e : list[k]) image.push_back(phi[static_cast<size_t>(e)]);
        std::sort(image.begin(), image.end());
        auto it = index.find(image);
        if (it == index.end())
            throw VerificationFailure("permutation does not act on the antichain list");
        action.permutation[k] = it->second;
        if (it->second != static_cast<int>(k)) action.is_identity = false;
    }
    return action;
}

}  // namespace rootposet
