#include "rootposet/intervals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rootposet/antichains.hpp"
#include "rootposet/errors.hpp"

namespace rootposet {

namespace {

std::string kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::A: return "A";
        case ModelKind::BC: return "BC";
        case ModelKind::D: return "D";
    }
    return "?";
}

bool label_fits(ModelKind kind, int n, const IntervalLabel& x) {
    if (x.i < 1 || x.j < x.i) return false;
    switch (kind) {
        case ModelKind::A: return !x.primed && x.j <= n;
        case ModelKind::BC: return !x.primed && x.j <= 2 * n - 1 && x.i + x.j <= 2 * n;
        case ModelKind::D:
            if (x.primed) return x.j == n;
            return x.j <= 2 * n - 1 && x.i + x.j <= 2 * n;
    }
    return false;
}

// containment, except that a primed and an unprimed interval both ending at n
// are incomparable
bool model_leq(ModelKind kind, int n, const IntervalLabel& x, const IntervalLabel& y) {
    if (kind == ModelKind::D && x.j == n && y.j == n && x.primed != y.primed) return false;
    return y.i <= x.i && x.j <= y.j;
}

void require_member(const IntervalModel& mod, const IntervalLabel& x, const char* op) {
    if (mod.index_of(x) < 0)
        throw VerificationFailure(std::string(op) + ": " + to_string(x) + " is not in " +
                                  kind_name(mod.kind) + "(" + std::to_string(mod.n) + ")");
}

std::vector<int> run_vector(int rank, int lo, int hi, int value) {
    std::vector<int> c(static_cast<size_t>(rank), 0);
    for (int k = lo; k <= hi; ++k) c[static_cast<size_t>(k)] = value;
    return c;
}

}  // namespace

std::string to_string(const IntervalLabel& label) {
    std::ostringstream os;
    os << '[' << label.i << ',' << label.j << ']';
    if (label.primed) os << '\'';
    return os.str();
}

int IntervalModel::index_of(const IntervalLabel& label) const {
    for (size_t e = 0; e < labels.size(); ++e)
        if (labels[e] == label) return static_cast<int>(e);
    return -1;
}

IndexSet IntervalModel::grade_set(int a) const {
    IndexSet s(size());
    for (int e = 0; e < size(); ++e)
        if (grade(e) == a) s.set(e);
    return s;
}

IntervalModel interval_model(ModelKind kind, int rank_param) {
    int min_rank = kind == ModelKind::A ? 1 : kind == ModelKind::BC ? 2 : 4;
    if (rank_param < min_rank)
        throw UnsupportedDiagram(kind_name(kind) + " model needs rank >= " +
                                 std::to_string(min_rank) + ", got " + std::to_string(rank_param));

    IntervalModel mod;
    mod.kind = kind;
    mod.rank_param = rank_param;
    mod.n = kind == ModelKind::D ? rank_param - 1 : rank_param;

    int max_len = kind == ModelKind::A ? mod.n : 2 * mod.n - 1;
    for (int l = 1; l <= max_len; ++l) {
        for (int i = 1;; ++i) {
            IntervalLabel x{i, i + l - 1, false};
            if (!label_fits(kind, mod.n, x)) break;
            mod.labels.push_back(x);
        }
        if (kind == ModelKind::D && l <= mod.n)
            mod.labels.push_back(IntervalLabel{mod.n - l + 1, mod.n, true});
    }

    const auto& labels = mod.labels;
    mod.order = Poset::from_leq(static_cast<int>(labels.size()), [&](int a, int b) {
        return model_leq(kind, mod.n, labels[static_cast<size_t>(a)], labels[static_cast<size_t>(b)]);
    });
    return mod;
}

IntervalModel model_for(const DynkinDiagram& d) {
    switch (d.family) {
        case Family::A: return interval_model(ModelKind::A, d.rank);
        case Family::B:
        case Family::C: return interval_model(ModelKind::BC, d.rank);
        case Family::D: return interval_model(ModelKind::D, d.rank);
        default:
            throw UnsupportedDiagram("no interval model for " + d.name());
    }
}

IndexSet comparability_set(const Poset& p, int e) {
    IndexSet s = p.incomparables(e).complement();
    return s;
}

bool is_almost_chain(const Poset& p, const IndexSet& subset) {
    return p.incomparable_pair_count(subset) <= 1;
}

IndexSet left_hook(const IntervalModel& mod, const IntervalLabel& x) {
    if (mod.kind == ModelKind::D) throw UnsupportedDiagram("hooks need the A or BC model");
    require_member(mod, x, "left_hook");
    IndexSet s(mod.size());
    for (int t = x.i; t <= x.j; ++t) {
        int e = mod.index_of(IntervalLabel{x.i, t, false});
        if (e >= 0) s.set(e);
    }
    for (int v = 1; v <= x.i; ++v) {
        int e = mod.index_of(IntervalLabel{v, x.j, false});
        if (e >= 0) s.set(e);
    }
    return s;
}

IndexSet right_hook(const IntervalModel& mod, const IntervalLabel& x) {
    if (mod.kind == ModelKind::D) throw UnsupportedDiagram("hooks need the A or BC model");
    require_member(mod, x, "right_hook");
    IndexSet s(mod.size());
    for (int v = x.i; v <= x.j; ++v) {
        int e = mod.index_of(IntervalLabel{v, x.j, false});
        if (e >= 0) s.set(e);
    }
    int top = mod.kind == ModelKind::A ? mod.n : 2 * mod.n - x.i;
    for (int t = x.j; t <= top; ++t) {
        int e = mod.index_of(IntervalLabel{x.i, t, false});
        if (e >= 0) s.set(e);
    }
    return s;
}

ComplementCover cover_complement(const IntervalModel& mod, const IntervalLabel& x) {
    if (mod.kind == ModelKind::D) throw UnsupportedDiagram("cover_complement needs the A or BC model");
    require_member(mod, x, "cover_complement");

    ComplementCover cover;
    cover.x = mod.index_of(x);
    int a = x.j - x.i;
    int top_s = mod.kind == ModelKind::A ? mod.n - a : (2 * mod.n - a) / 2;
    for (int s = 1; s <= top_s; ++s) {
        if (s == x.i) continue;
        IntervalLabel through{s, s + a, false};
        HookChain chain;
        chain.side = s < x.i ? 'L' : 'R';
        chain.s = s;
        chain.members = chain.side == 'L' ? left_hook(mod, through) : right_hook(mod, through);
        cover.chains.push_back(std::move(chain));
    }

    const IndexSet& target = mod.order.incomparables(cover.x);
    IndexSet seen(mod.size());
    for (const HookChain& chain : cover.chains) {
        if (!mod.order.is_chain(chain.members))
            throw CoverFailure("hook through [" + std::to_string(chain.s) + "," +
                               std::to_string(chain.s + a) + "] is not a chain");
        if (chain.members.intersects(seen))
            throw CoverFailure("hooks overlap while covering the complement of " + to_string(x));
        if (!chain.members.is_subset_of(target))
            throw CoverFailure("hook through [" + std::to_string(chain.s) + "," +
                               std::to_string(chain.s + a) + "] meets a comparable of " + to_string(x));
        seen |= chain.members;
    }
    if (!(seen == target))
        throw CoverFailure("hook chains miss part of the complement of " + to_string(x));
    return cover;
}

int max_antichain_through(const IntervalModel& mod, const IntervalLabel& x) {
    require_member(mod, x, "max_antichain_through");
    int e = mod.index_of(x);
    int best = width_through(mod.order, IndexSet::full(mod.size()), e);
    if (mod.kind != ModelKind::D) {
        int a = x.j - x.i;
        int chains = static_cast<int>(cover_complement(mod, x).chains.size());
        int closed = mod.kind == ModelKind::A ? mod.n - a : (2 * mod.n - a) / 2;
        if (best != chains + 1 || best != closed)
            throw VerificationFailure("antichain bound through " + to_string(x) + ": search " +
                                      std::to_string(best) + ", cover " + std::to_string(chains + 1) +
                                      ", closed form " + std::to_string(closed));
    }
    return best;
}

IntervalLabel interval_of_coeffs(Family f, int rank, const std::vector<int>& coeffs) {
    if (f != Family::A && f != Family::B && f != Family::C)
        throw UnsupportedDiagram("interval dictionaries cover families A, B, C");
    if (static_cast<int>(coeffs.size()) != rank)
        throw NotARoot("coefficient vector has wrong rank");

    int p = -1, q = -1;
    for (int k = 0; k < rank; ++k) {
        if (coeffs[static_cast<size_t>(k)] == 0) continue;
        if (p < 0) p = k;
        if (q >= 0 && q != k - 1) throw NotARoot("support is not contiguous");
        q = k;
    }
    if (p < 0) throw NotARoot("zero vector");

    int first2 = -1;
    for (int k = p; k <= q; ++k) {
        int c = coeffs[static_cast<size_t>(k)];
        if (c != 1 && c != 2) throw NotARoot("coefficient outside {1,2}");
        if (c == 2 && first2 < 0) first2 = k;
    }

    auto ones_then_twos = [&](int upto) {
        for (int k = p; k <= upto; ++k) {
            int c = coeffs[static_cast<size_t>(k)];
            if ((k < first2 && c != 1) || (k >= first2 && c != 2)) return false;
        }
        return true;
    };

    switch (f) {
        case Family::A:
            if (first2 >= 0) throw NotARoot("type A coefficients are 0 or 1");
            return IntervalLabel{p + 1, q + 1, false};
        case Family::B:
            if (first2 < 0) return IntervalLabel{p + 1, q == rank - 1 ? rank : q + 1, false};
            // e_{p+1} + e_{first2+1}: ones then twos through the short end
            if (q != rank - 1 || first2 == p || !ones_then_twos(q))
                throw NotARoot("not a type B pattern");
            return IntervalLabel{p + 1, 2 * rank - first2, false};
        default: break;
    }

    // family C
    if (first2 < 0) {
        if (q == rank - 1) return IntervalLabel{p + 1, rank, false};  // e_{p+1} + e_rank
        return IntervalLabel{p + 1, q + 1, false};                    // e_{p+1} - e_{q+2}
    }
    // ones, twos, then a single 1 on the long node
    if (q != rank - 1 || coeffs[static_cast<size_t>(rank - 1)] != 1 || first2 > rank - 2 ||
        !ones_then_twos(rank - 2))
        throw NotARoot("not a type C pattern");
    return IntervalLabel{p + 1, 2 * rank - first2 - 1, false};
}

std::vector<int> coeffs_of_interval(Family f, int rank, const IntervalLabel& label) {
    ModelKind kind = f == Family::A ? ModelKind::A : ModelKind::BC;
    if (f != Family::A && f != Family::B && f != Family::C)
        throw UnsupportedDiagram("interval dictionaries cover families A, B, C");
    if (!label_fits(kind, rank, label))
        throw VerificationFailure(to_string(label) + " is outside the rank " + std::to_string(rank) +
                                  " model");

    int i = label.i, j = label.j;
    switch (f) {
        case Family::A:
            return run_vector(rank, i - 1, j - 1, 1);
        case Family::B: {
            if (j <= rank) return run_vector(rank, i - 1, (j == rank ? rank : j) - 1, 1);
            std::vector<int> c = run_vector(rank, i - 1, 2 * rank - j - 1, 1);
            for (int k = 2 * rank - j; k < rank; ++k) c[static_cast<size_t>(k)] = 2;
            return c;
        }
        default: break;
    }
    // family C
    if (j < rank) return run_vector(rank, i - 1, j - 1, 1);
    std::vector<int> c = run_vector(rank, i - 1, 2 * rank - j - 2, 1);
    for (int k = 2 * rank - j - 1; k <= rank - 2; ++k) c[static_cast<size_t>(k)] = 2;
    c[static_cast<size_t>(rank - 1)] = 1;
    return c;
}

std::vector<int> fork_fold(const std::vector<int>& coeffs) {
    if (coeffs.size() < 4) throw NotARoot("fork fold needs rank >= 4 coefficients");
    std::vector<int> folded(coeffs.begin(), coeffs.end() - 2);
    folded.push_back(coeffs[coeffs.size() - 2] + coeffs[coeffs.size() - 1]);
    return folded;
}

Root project_fork(const DynkinDiagram& dm, const Root& r) {
    if (dm.family != Family::D) throw UnsupportedDiagram("project_fork starts from a D diagram");
    int n = dm.rank - 1;
    IntervalLabel label = interval_of_coeffs(Family::B, n, fork_fold(r.coeffs));
    return Root{coeffs_of_interval(Family::C, n, label)};
}

std::vector<int> project_poset(const RootPoset& d_poset, const RootPoset& c_poset) {
    const DynkinDiagram& dm = d_poset.diagram();
    if (dm.family != Family::D || c_poset.diagram().family != Family::C ||
        c_poset.diagram().rank != dm.rank - 1)
        throw UnsupportedDiagram("project_poset maps D_m onto C_{m-1}");

    int n = dm.rank - 1;
    std::vector<int> map(static_cast<size_t>(d_poset.size()), -1);
    std::vector<int> fiber(static_cast<size_t>(c_poset.size()), 0);
    for (int e = 0; e < d_poset.size(); ++e) {
        int image = c_poset.index_of(project_fork(dm, d_poset.root(e)));
        if (image < 0) throw VerificationFailure("fold image is not a positive root");
        if (d_poset.height(e) != c_poset.height(image))
            throw VerificationFailure("fold image changed height");
        map[static_cast<size_t>(e)] = image;
        ++fiber[static_cast<size_t>(image)];
    }
    for (int a = 0; a < d_poset.size(); ++a)
        for (int b = 0; b < d_poset.size(); ++b)
            if (d_poset.leq(a, b) &&
                !c_poset.leq(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
                throw VerificationFailure("fold image is not order preserving");
    for (int c = 0; c < c_poset.size(); ++c) {
        IntervalLabel label = interval_of_coeffs(Family::C, n, c_poset.root(c).coeffs);
        int expected = label.j == n ? 2 : 1;
        if (fiber[static_cast<size_t>(c)] != expected)
            throw VerificationFailure("fiber over " + to_string(label) + " has size " +
                                      std::to_string(fiber[static_cast<size_t>(c)]));
    }
    return map;
}

namespace {

IntervalLabel model_label_of_root(const DynkinDiagram& d, const Root& r) {
    switch (d.family) {
        case Family::A:
        case Family::B:
        case Family::C:
            return interval_of_coeffs(d.family, d.rank, r.coeffs);
        case Family::D: {
            int n = d.rank - 1;
            IntervalLabel label = interval_of_coeffs(Family::B, n, fork_fold(r.coeffs));
            const auto& c = r.coeffs;
            label.primed = label.j == n && c[c.size() - 1] == 1 && c[c.size() - 2] == 0;
            return label;
        }
        default:
            throw UnsupportedDiagram("no interval model for " + d.name());
    }
}

}  // namespace

std::vector<int> canonical_model_map(const RootPoset& rp, const IntervalModel& mod) {
    const DynkinDiagram& d = rp.diagram();
    ModelKind expected = d.family == Family::A   ? ModelKind::A
                         : d.family == Family::D ? ModelKind::D
                                                 : ModelKind::BC;
    if (d.family == Family::E || d.family == Family::F || d.family == Family::G)
        throw UnsupportedDiagram("no interval model for " + d.name());
    if (mod.rank_param != d.rank || mod.kind != expected)
        throw VerificationFailure("model does not match the diagram " + d.name());
    if (rp.size() != mod.size())
        throw VerificationFailure("model size mismatch for " + d.name());

    std::vector<int> map(static_cast<size_t>(rp.size()), -1);
    std::vector<bool> hit(static_cast<size_t>(mod.size()), false);
    for (int e = 0; e < rp.size(); ++e) {
        IntervalLabel label = model_label_of_root(d, rp.root(e));
        int idx = mod.index_of(label);
        if (idx < 0 || hit[static_cast<size_t>(idx)])
            throw VerificationFailure("dictionary map for " + d.name() + " is not a bijection");
        if (label.length() != rp.height(e))
            throw VerificationFailure("interval length differs from root height in " + d.name());
        hit[static_cast<size_t>(idx)] = true;
        map[static_cast<size_t>(e)] = idx;
    }
    for (int a = 0; a < rp.size(); ++a)
        for (int b = 0; b < rp.size(); ++b)
            if (rp.leq(a, b) !=
                mod.order.leq(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
                throw VerificationFailure("dictionary map for " + d.name() +
                                          " is not an order isomorphism");
    return map;
}

namespace {

// iterated signature refinement shared by both posets; returns class ids
std::pair<std::vector<int>, std::vector<int>> refine_signatures(const Poset& p, const Poset& q) {
    auto covers_of = [](const Poset& poset) {
        std::vector<std::vector<int>> up(static_cast<size_t>(poset.size()));
        std::vector<std::vector<int>> dn(static_cast<size_t>(poset.size()));
        for (auto [lo, hi] : poset.cover_pairs()) {
            up[static_cast<size_t>(lo)].push_back(hi);
            dn[static_cast<size_t>(hi)].push_back(lo);
        }
        return std::pair(up, dn);
    };
    auto [pup, pdn] = covers_of(p);
    auto [qup, qdn] = covers_of(q);
    std::vector<int> pg = p.grades(), qg = q.grades();

    std::vector<int> ps(static_cast<size_t>(p.size()), 0), qs(static_cast<size_t>(q.size()), 0);
    auto initial = [](const Poset& poset, const std::vector<int>& g, int v) {
        std::ostringstream os;
        os << g[static_cast<size_t>(v)] << ':' << poset.up(v).count() << ':' << poset.down(v).count();
        return os.str();
    };
    for (int round = 0; round < 4; ++round) {
        std::map<std::string, int> ids;
        auto key = [&](const Poset& poset, const std::vector<int>& g,
                       const std::vector<std::vector<int>>& up,
                       const std::vector<std::vector<int>>& dn, const std::vector<int>& sig, int v) {
            std::vector<int> a, b;
            for (int w : up[static_cast<size_t>(v)]) a.push_back(sig[static_cast<size_t>(w)]);
            for (int w : dn[static_cast<size_t>(v)]) b.push_back(sig[static_cast<size_t>(w)]);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::ostringstream os;
            os << (round == 0 ? initial(poset, g, v) : std::to_string(sig[static_cast<size_t>(v)]));
            os << '|';
            for (int x : a) os << x << ',';
            os << '|';
            for (int x : b) os << x << ',';
            return os.str();
        };
        std::vector<int> pn(ps.size()), qn(qs.size());
        for (int v = 0; v < p.size(); ++v) {
            std::string k = key(p, pg, pup, pdn, ps, v);
            auto it = ids.emplace(k, static_cast<int>(ids.size())).first;
            pn[static_cast<size_t>(v)] = it->second;
        }
        for (int v = 0; v < q.size(); ++v) {
            std::string k = key(q, qg, qup, qdn, qs, v);
            auto it = ids.emplace(k, static_cast<int>(ids.size())).first;
            qn[static_cast<size_t>(v)] = it->second;
        }
        ps = std::move(pn);
        qs = std::move(qn);
    }
    return {ps, qs};
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return std::nullopt;
    int n = p.size();
    if (n == 0) return std::vector<int>{};

    auto [ps, qs] = refine_signatures(p, q);
    std::map<int, int> pcount, qcount;
    for (int s : ps) ++pcount[s];
    for (int s : qs) ++qcount[s];
    if (pcount != qcount) return std::nullopt;

    // rarest signature class first
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = pcount[ps[static_cast<size_t>(a)]], cb = pcount[ps[static_cast<size_t>(b)]];
        if (ca != cb) return ca < cb;
        return a < b;
    });

    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    auto consistent = [&](int pos, int v, int w) {
        for (int k = 0; k < pos; ++k) {
            int v2 = order[static_cast<size_t>(k)], w2 = map[static_cast<size_t>(v2)];
            if (p.leq(v, v2) != q.leq(w, w2) || p.leq(v2, v) != q.leq(w2, w)) return false;
        }
        return true;
    };
    std::function<bool(int)> place = [&](int pos) {
        if (pos == n) return true;
        int v = order[static_cast<size_t>(pos)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)] || qs[static_cast<size_t>(w)] != ps[static_cast<size_t>(v)])
                continue;
            if (!consistent(pos, v, w)) continue;
            used[static_cast<size_t>(w)] = true;
            map[static_cast<size_t>(v)] = w;
            if (place(pos + 1)) return true;
            used[static_cast<size_t>(w)] = false;
            map[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return map;
}

FoldReport check_fold(int m) {
    FoldReport rep;
    DynkinDiagram dm = dynkin(Family::D, m);
    rep.diagram = dm.name();
    int n = m - 1;

    RootPoset rp_d = build_poset(dm);
    RootPoset rp_c = build_poset(dynkin(Family::C, n));
    IntervalModel mod_d = interval_model(ModelKind::D, m);
    IntervalModel mod_bc = interval_model(ModelKind::BC, n);

    std::vector<int> pi;
    try {
        pi = project_poset(rp_d, rp_c);
        rep.order_preserving = rep.heights_preserved = rep.fibers_match = true;
    } catch (const VerificationFailure& e) {
        rep.failures.push_back(e.what());
        return rep;
    }
    IndexSet image(rp_c.size());
    for (int v : pi) image.set(v);
    rep.surjective = image.count() == rp_c.size();
    if (!rep.surjective) rep.failures.push_back("fold misses part of the target");

    std::vector<int> to_model_d = canonical_model_map(rp_d, mod_d);
    std::vector<int> to_model_c;
    {
        std::vector<int> map(static_cast<size_t>(rp_c.size()), -1);
        for (int e = 0; e < rp_c.size(); ++e)
            map[static_cast<size_t>(e)] =
                mod_bc.index_of(interval_of_coeffs(Family::C, n, rp_c.root(e).coeffs));
        to_model_c = map;
    }

    rep.square_commutes = true;
    for (int e = 0; e < rp_d.size(); ++e) {
        IntervalLabel lifted = mod_d.labels[static_cast<size_t>(to_model_d[static_cast<size_t>(e)])];
        lifted.primed = false;
        IntervalLabel target =
            mod_bc.labels[static_cast<size_t>(to_model_c[static_cast<size_t>(pi[static_cast<size_t>(e)])])];
        if (!(lifted == target)) {
            rep.square_commutes = false;
            rep.failures.push_back("fold disagrees with prime dropping at element " + std::to_string(e));
            break;
        }
    }

    // preimage of a BC subset inside the D model
    auto lift = [&](const IndexSet& bc_set) {
        IndexSet s(mod_d.size());
        for (int e = 0; e < mod_d.size(); ++e) {
            IntervalLabel stripped = mod_d.labels[static_cast<size_t>(e)];
            stripped.primed = false;
            int idx = mod_bc.index_of(stripped);
            if (idx >= 0 && bc_set.test(idx)) s.set(e);
        }
        return s;
    };

    rep.hook_width_bounded = rep.hook_pairs_are_twin_diagonals = rep.almost_chain_iff_single_diagonal = true;
    IndexSet all_d = IndexSet::full(mod_d.size());
    for (const IntervalLabel& x : mod_bc.labels) {
        for (int side = 0; side < 2; ++side) {
            IndexSet hook = side == 0 ? left_hook(mod_bc, x) : right_hook(mod_bc, x);
            int diagonals = 0;
            hook.for_each([&](int e) {
                if (mod_bc.labels[static_cast<size_t>(e)].j == n) ++diagonals;
            });
            IndexSet lifted = lift(hook);
            if (width(mod_d.order, lifted).width > 2) {
                rep.hook_width_bounded = false;
                rep.failures.push_back("hook preimage through " + to_string(x) + " has width > 2");
            }
            std::vector<int> members = lifted.to_vector();
            for (size_t ai = 0; ai < members.size(); ++ai)
                for (size_t bi = ai + 1; bi < members.size(); ++bi) {
                    int a = members[ai], b = members[bi];
                    if (mod_d.order.comparable(a, b)) continue;
                    const IntervalLabel& la = mod_d.labels[static_cast<size_t>(a)];
                    const IntervalLabel& lb = mod_d.labels[static_cast<size_t>(b)];
                    if (!(la.j == n && lb.j == n && la.primed != lb.primed)) {
                        rep.hook_pairs_are_twin_diagonals = false;
                        rep.failures.push_back("non-diagonal incomparable pair above hook " + to_string(x));
                    }
                }
            if (is_almost_chain(mod_d.order, lifted) != (diagonals <= 1)) {
                rep.almost_chain_iff_single_diagonal = false;
                rep.failures.push_back("almost-chain test disagrees with the diagonal count at " +
                                       to_string(x));
            }
        }
    }

    rep.preimage_matches_comparability = true;
    for (const IntervalLabel& x : mod_bc.labels) {
        IndexSet lifted = lift(comparability_set(mod_bc.order, mod_bc.index_of(x)));
        IndexSet direct = comparability_set(mod_d.order, mod_d.index_of(IntervalLabel{x.i, x.j, false}));
        if (x.j == n)
            direct |= comparability_set(mod_d.order, mod_d.index_of(IntervalLabel{x.i, x.j, true}));
        if (!(lifted == direct)) {
            rep.preimage_matches_comparability = false;
            rep.failures.push_back("comparability preimage mismatch at " + to_string(x));
        }
    }

    rep.long_intervals_excluded = rep.bound_holds = true;
    for (int e = 0; e < mod_d.size(); ++e) {
        int a = mod_d.grade(e);
        int best = width_through(mod_d.order, all_d, e);
        if (best > n - (a + 1) / 2 + 1) {
            rep.bound_holds = false;
            rep.failures.push_back("antichain bound fails through " +
                                   to_string(mod_d.labels[static_cast<size_t>(e)]));
        }
        if (a >= 3 && best > m - 2) {
            rep.long_intervals_excluded = false;
            rep.failures.push_back("grade >= 3 element meets an (m-1)-antichain: " +
                                   to_string(mod_d.labels[static_cast<size_t>(e)]));
        }
    }
    return rep;
}

}  // namespace rootposet
