#pragma once
/*
 *  Enumeration of standard-form descriptions for sweeps.
 *
 *  Structures (component shapes and the multigraph of annuli between them)
 *  are enumerated exhaustively up to relabeling of equal-shape components.
 *  Each structure then receives a few canonical labelings followed by
 *  deterministically sampled ones: behaviours, twist signs and
 *  multiplicities, flip-twists, boundary rotations and extra twists, and
 *  pseudo-Anosov inventories.  Only descriptions that validate are emitted.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fpbound/mcdesc.hpp"

namespace fpbound::corpus {

struct CorpusConfig
{
    int max_components = 4;
    int max_genus = 2;
    int max_boundaries = 4;
    int max_multiplicity = 3;
    int max_singularities = 2;
    int max_prongs = 6;
    // labelings tried per structure, indexed by component count (last entry repeats)
    std::vector<std::size_t> labelings_by_components{0, 64, 40, 14, 2};

    std::size_t labelings_for(std::size_t components) const
    {
        if (labelings_by_components.empty())
            return 0;
        return labelings_by_components[std::min(components, labelings_by_components.size() - 1)];
    }
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct Shape
{
    int genus = 0;
    int boundaries = 0;
    friend auto operator<=>(Shape const&, Shape const&) = default;
};

/// Components with their shapes plus edge multiplicities e[i][j] (i <= j;
/// e[i][i] counts self-gluings).
struct Structure
{
    std::vector<Shape> shapes;
    std::vector<std::vector<int>> edges;

    int used(std::size_t i) const
    {
        int u = 2 * edges[i][i];
        for (std::size_t j = 0; j < shapes.size(); ++j)
            if (j != i)
                u += edges[std::min(i, j)][std::max(i, j)];
        return u;
    }
};

namespace detail {

inline bool connected(Structure const& s)
{
    std::size_t const k = s.shapes.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (s.edges[i][j] > 0)
                parent[find(i)] = find(j);
    for (std::size_t i = 1; i < k; ++i)
        if (find(i) != find(0))
            return false;
    return true;
}

inline std::vector<int> canonical_key(Structure const& s)
{
    std::size_t const k = s.shapes.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            ok = s.shapes[perm[i]] == s.shapes[i];
        if (!ok)
            continue;
        std::vector<int> key;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j) {
                std::size_t a = perm[i], b = perm[j];
                key.push_back(s.edges[std::min(a, b)][std::max(a, b)]);
            }
        if (best.empty() || key < best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace detail

inline std::vector<Structure> enumerate_structures(CorpusConfig const& cfg)
{
    std::vector<Shape> shapes;
    for (int g = 0; g <= cfg.max_genus; ++g)
        for (int b = 0; b <= cfg.max_boundaries; ++b)
            if (2 - 2 * g - b < 0)
                shapes.push_back({g, b});

    std::vector<Structure> out;
    std::set<std::vector<int>> seen;
    std::vector<Shape> pick;

    std::function<void(std::size_t)> choose_shapes;
    std::function<void(Structure&, std::size_t, std::size_t)> choose_edges;

    choose_edges = [&](Structure& s, std::size_t i, std::size_t j) {
        std::size_t const k = s.shapes.size();
        if (i == k) {
            if (!detail::connected(s))
                return;
            auto key = detail::canonical_key(s);
            key.insert(key.begin(), static_cast<int>(k));
            for (auto const& sh : s.shapes) {
                key.push_back(sh.genus);
                key.push_back(sh.boundaries);
            }
            if (seen.insert(key).second)
                out.push_back(s);
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj == k) {
            ++ni;
            nj = ni;
        }
        int const room_i = s.shapes[i].boundaries - s.used(i);
        int const room_j = s.shapes[j].boundaries - s.used(j);
        int const cap = i == j ? room_i / 2 : std::min(room_i, room_j);
        for (int e = 0; e <= cap; ++e) {
            s.edges[i][j] = e;
            choose_edges(s, ni, nj);
        }
        s.edges[i][j] = 0;
    };

    choose_shapes = [&](std::size_t from) {
        if (!pick.empty()) {
            Structure s;
            s.shapes = pick;
            s.edges.assign(pick.size(), std::vector<int>(pick.size(), 0));
            choose_edges(s, 0, 0);
        }
        if (pick.size() == static_cast<std::size_t>(cfg.max_components))
            return;
        for (std::size_t t = from; t < shapes.size(); ++t) {
            pick.push_back(shapes[t]);
            choose_shapes(t);
            pick.pop_back();
        }
    };
    choose_shapes(0);
    return out;
}

/// Circle-level skeleton of a structure: components with named circles,
/// annuli (unlabeled), and the free circles.
inline desc::Description skeleton(Structure const& s)
{
    desc::Description d;
    std::size_t const k = s.shapes.size();
    std::vector<std::size_t> next(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        desc::Component c;
        c.id = "S" + std::to_string(i + 1);
        c.genus = s.shapes[i].genus;
        for (int b = 0; b < s.shapes[i].boundaries; ++b)
            c.boundary.push_back(c.id + "c" + std::to_string(b + 1));
        d.components.push_back(c);
    }
    int n = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            for (int e = 0; e < s.edges[i][j]; ++e) {
                desc::Annulus a;
                a.id = "N" + std::to_string(++n);
                a.left = d.components[i].boundary[next[i]++];
                a.right = d.components[j].boundary[next[j]++];
                d.annuli.push_back(a);
            }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t b = next[i]; b < d.components[i].boundary.size(); ++b)
            d.surface_boundary.push_back({d.components[i].boundary[b], desc::Sign::Plus, 0});
    return d;
}

namespace detail {

inline desc::PseudoAnosov random_inventory(std::mt19937_64& rng, desc::Component const& c, CorpusConfig const& cfg)
{
    auto coin = [&](int num, int den) { return static_cast<int>(rng() % static_cast<unsigned>(den)) < num; };
    auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    desc::PseudoAnosov pa;
    int const ns = uniform(0, cfg.max_singularities);
    for (int i = 0; i < ns; ++i)
        pa.singularities.push_back({uniform(3, std::max(3, cfg.max_prongs)), coin(1, 2)});
    int const nx = uniform(0, 2);
    for (int i = 0; i < nx; ++i)
        pa.smooth_fixed_points.push_back({coin(1, 2) ? 1 : -1});
    for (auto const& circle : c.boundary) {
        desc::PaBoundary b;
        int const r = uniform(0, 9);
        if (r < 5) {
            b.prongs = uniform(1, 3);
        } else if (r < 8) {
            b.prongs = uniform(1, 3);
            b.rotated = true;
        } else {
            b.rotated_puncture = true;
        }
        pa.boundary[circle] = b;
    }
    return pa;
}

} // namespace detail

/// Labeling number `which` of a skeleton.  Even labelings below 8 are
/// canonical (all identity; alternating twist signs; maximal multiplicities
/// with boundary twists; periodic everywhere); the rest are sampled from `rng`.
inline desc::Description label(desc::Description d, std::size_t which, std::mt19937_64& rng, CorpusConfig const& cfg)
{
    if (which < 8 && which % 2 == 0)
        which /= 2;
    else
        which = which < 8 ? 4 + which / 2 : which;
    auto coin = [&](int num, int den) { return static_cast<int>(rng() % static_cast<unsigned>(den)) < num; };
    auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    using desc::Sign;

    switch (which) {
    case 0:
        return d;
    case 1:
        for (std::size_t i = 0; i < d.annuli.size(); ++i)
            d.annuli[i].sign = i % 2 ? Sign::Minus : Sign::Plus;
        for (std::size_t i = 0; i < d.surface_boundary.size(); ++i)
            d.surface_boundary[i].rotation = (i + d.annuli.size()) % 2 ? Sign::Minus : Sign::Plus;
        return d;
    case 2:
        for (auto& a : d.annuli)
            a.multiplicity = cfg.max_multiplicity;
        for (auto& s : d.surface_boundary)
            s.extra_twists = 1;
        return d;
    case 3:
        for (auto& c : d.components)
            c.behavior = desc::Periodic{{{"q"}}};
        return d;
    default:
        break;
    }

    // swapped pair: two equal-shape components exchanged by the map, with a flip between them
    if (which % 9 == 8 && d.components.size() == 2 && d.components[0].genus == d.components[1].genus &&
        d.components[0].boundary.size() == d.components[1].boundary.size()) {
        desc::Topology const topo(d);
        std::size_t flip_at = d.annuli.size();
        for (std::size_t i = 0; i < d.annuli.size() && flip_at == d.annuli.size(); ++i)
            if (topo.owner(d.annuli[i].left).id != topo.owner(d.annuli[i].right).id)
                flip_at = i;
        if (flip_at < d.annuli.size()) {
            for (auto& c : d.components) {
                c.return_time = 2;
                c.behavior = coin(1, 2) ? desc::Behavior{desc::Identity{}} : desc::Behavior{desc::Periodic{}};
            }
            Sign const s = coin(1, 2) ? Sign::Plus : Sign::Minus;
            for (auto& a : d.annuli)
                a.sign = s;
            d.annuli[flip_at].kind = desc::AnnulusKind::FlipTwist;
            d.annuli[flip_at].sign = coin(1, 2) ? Sign::Plus : Sign::Minus;
            for (auto& b : d.surface_boundary)
                b.rotation = coin(1, 2) ? Sign::Plus : Sign::Minus;
            return d;
        }
    }

    int const mode = uniform(0, 9);
    for (auto& c : d.components) {
        int const r = uniform(0, 19);
        if (mode < 4 || r < 9)
            c.behavior = desc::Identity{};
        else if (r < 12) {
            desc::Periodic p;
            int const n = uniform(0, 2);
            for (int i = 0; i < n; ++i)
                p.fixed_points.push_back({"q" + std::to_string(i + 1)});
            c.behavior = p;
        } else {
            c.behavior = detail::random_inventory(rng, c, cfg);
        }
    }
    Sign const global = coin(1, 2) ? Sign::Plus : Sign::Minus;
    int const flip_odds = mode < 6 ? 0 : 3; // out of 10
    desc::Topology const topo(d);
    for (auto& a : d.annuli) {
        a.sign = coin(3, 10) ? (global == Sign::Plus ? Sign::Minus : Sign::Plus) : global;
        a.multiplicity = coin(2, 3) ? 1 : uniform(2, cfg.max_multiplicity);
        auto const& l = topo.owner(a.left);
        if (l.id == topo.owner(a.right).id && !l.is_identity() && coin(flip_odds, 10)) {
            a.kind = desc::AnnulusKind::FlipTwist;
            a.multiplicity = 1;
        }
    }
    for (auto& s : d.surface_boundary) {
        s.rotation = coin(3, 10) ? (global == Sign::Plus ? Sign::Minus : Sign::Plus) : global;
        int const extra = coin(3, 4) ? 0 : uniform(1, 2);
        s.extra_twists = s.rotation == Sign::Plus ? extra : -extra;
    }
    return d;
}

struct CorpusStats
{
    std::size_t structures = 0;
    std::size_t candidates = 0;
    std::size_t emitted = 0;
    std::map<std::string, std::size_t> rejected; // by first error code
};

/// Calls f(name, description) for every emitted (valid) description.
template <class F>
CorpusStats for_each_instance(CorpusConfig const& cfg, F&& f)
{
    CorpusStats stats;
    auto const structures = enumerate_structures(cfg);
    stats.structures = structures.size();
    for (std::size_t si = 0; si < structures.size(); ++si) {
        desc::Description const sk = skeleton(structures[si]);
        std::mt19937_64 rng(cfg.seed ^ (0x100000001b3ULL * (si + 1)));
        std::size_t const labelings = cfg.labelings_for(structures[si].shapes.size());
        for (std::size_t li = 0; li < labelings; ++li) {
            desc::Description d = label(sk, li, rng, cfg);
            ++stats.candidates;
            auto v = desc::validate(d);
            if (!v.ok()) {
                ++stats.rejected[v.errors.front().code];
                continue;
            }
            ++stats.emitted;
            f("structure" + std::to_string(si) + "/labeling" + std::to_string(li), *v.normalized);
        }
    }
    return stats;
}

} // namespace fpbound::corpus
