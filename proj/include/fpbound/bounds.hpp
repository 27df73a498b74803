#pragma once
/*
 *  Minimal fixed-point counts for area-preserving maps in a mapping class:
 *  nondegenerate (sum of |index| plus two per "pocket" component) and
 *  possibly degenerate (essential classes plus pockets plus fixed annuli),
 *  together with an explicit degenerate model realizing the latter.
 *
 *  A pocket is a fixed identity component of genus zero that does not abut a
 *  pseudo-Anosov piece, whose ends all rotate the same way, and whose boundary
 *  circles are all null in homology relative to the surface boundary.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fpbound/context.hpp"
#include "fpbound/floer.hpp"

namespace fpbound::bounds {

enum class Classification { Periodic, PseudoAnosov, Reducible };

inline char const* to_string(Classification c)
{
    switch (c) {
    case Classification::Periodic: return "periodic";
    case Classification::PseudoAnosov: return "pseudo_anosov";
    case Classification::Reducible: return "reducible";
    }
    return "?";
}

/// Shape rule on the expanded description.
inline Classification classification(desc::Description const& d)
{
    desc::Description const e = desc::expand_twists(d);
    if (e.components.size() == 1 && e.annuli.empty()) {
        auto const& c = e.components.front();
        if (c.return_time == 1 && (c.is_identity() || c.is_periodic()))
            return Classification::Periodic;
        if (c.is_pseudo_anosov())
            return Classification::PseudoAnosov;
    }
    return Classification::Reducible;
}

/// Component across the annulus at `circle`, skipping over inserted fixed
/// annuli; null at the surface boundary.
inline desc::Component const* neighbor(desc::Topology const& topo, std::string circle,
                                       std::string* facing = nullptr)
{
    for (std::size_t guard = 0; guard <= topo.description().components.size(); ++guard) {
        auto other = topo.partner(circle);
        if (!other)
            return nullptr;
        auto const& c = topo.owner(*other);
        if (!c.fixed_annulus) {
            if (facing)
                *facing = *other;
            return &c;
        }
        circle = c.boundary[0] == *other ? c.boundary[1] : c.boundary[0];
    }
    return nullptr;
}

inline bool abuts_pseudo_anosov(desc::Topology const& topo, desc::Component const& s)
{
    for (auto const& c : s.boundary)
        if (auto const* n = neighbor(topo, c); n && n->is_pseudo_anosov())
            return true;
    return false;
}

/// True when some end of `s` faces a rotated boundary or puncture of a
/// pseudo-Anosov piece, where the pocket and rank-jump conditions can part ways.
inline bool faces_rotated_pa(desc::Topology const& topo, desc::Component const& s)
{
    for (auto const& c : s.boundary) {
        std::string facing;
        auto const* n = neighbor(topo, c, &facing);
        if (!n || !n->is_pseudo_anosov())
            continue;
        auto const* b = topo.pa_boundary(facing);
        if (!b || !b->unrotated() || n->return_time != 1)
            return true;
    }
    return false;
}

inline bool uniform_rotation(desc::Component const& s, desc::RotationAssignment const& rot)
{
    std::set<desc::Sign> signs;
    for (auto const& c : s.boundary) {
        auto it = rot.find(c);
        if (it == rot.end())
            return false;
        signs.insert(it->second);
    }
    return signs.size() <= 1;
}

inline bool boundaries_null(Context const& ctx, desc::Component const& s)
{
    return std::all_of(s.boundary.begin(), s.boundary.end(),
                       [&](std::string const& c) { return ctx.homology.is_null_rel_boundary(c); });
}

inline bool is_pocket(Context const& ctx, desc::Component const& s)
{
    return s.is_fixed_identity() && s.genus == 0 && !s.boundary.empty() &&
           !abuts_pseudo_anosov(ctx.topology(), s) && uniform_rotation(s, ctx.rotations) && boundaries_null(ctx, s);
}

/// The rank-jump condition of the Floer oracle: like a pocket, but only
/// unrotated prong boundaries across an annulus disqualify.
inline bool floer_jump_predicate(Context const& ctx, nielsen::NielsenClass const& c)
{
    if (c.provenance != nielsen::Provenance::FixedComponent || !c.abutting_iiid.empty())
        return false;
    auto const& s = ctx.topology().component(c.host);
    return s.genus == 0 && !s.boundary.empty() && uniform_rotation(s, ctx.rotations) && boundaries_null(ctx, s);
}

struct ACount
{
    int count = 0;
    std::vector<std::string> components;
};

inline ACount compute_A(Context const& ctx)
{
    ACount a;
    for (auto const& s : ctx.expanded.components)
        if (is_pocket(ctx, s)) {
            ++a.count;
            a.components.push_back(s.id);
        }
    return a;
}

inline int compute_B(desc::Description const& expanded)
{
    int b = 0;
    for (auto const& c : expanded.components)
        b += c.fixed_annulus && c.return_time == 1;
    return b;
}

inline int theorem1_bound(Context const& ctx)
{
    return nielsen::reidemeister_trace(ctx.classes) + 2 * compute_A(ctx).count;
}

inline int theorem2_bound(Context const& ctx)
{
    return nielsen::essential_count(ctx.classes) + compute_A(ctx).count + compute_B(ctx.expanded);
}

inline int theorem1_bound(desc::Description const& d) { return theorem1_bound(Context(d)); }
inline int theorem2_bound(desc::Description const& d) { return theorem2_bound(Context(d)); }

struct WitnessPoint
{
    enum class Kind { Nondegenerate, MonkeySaddle, Degenerate };
    Kind kind = Kind::Nondegenerate;
    int prongs = 0; // monkey saddles only
    int index = 0;

    friend bool operator==(WitnessPoint const&, WitnessPoint const&) = default;
};

inline char const* to_string(WitnessPoint::Kind k)
{
    switch (k) {
    case WitnessPoint::Kind::Nondegenerate: return "nondegenerate";
    case WitnessPoint::Kind::MonkeySaddle: return "monkey_saddle";
    case WitnessPoint::Kind::Degenerate: return "degenerate";
    }
    return "?";
}

inline WitnessPoint monkey_saddle(int p) { return {WitnessPoint::Kind::MonkeySaddle, p, 1 - p}; }

/// Fixed points realizing the degenerate count for one class.  A pocket keeps
/// an extremum next to a single monkey saddle; a fixed annulus collapses to
/// one index-0 point.
inline std::vector<WitnessPoint> class_witness(nielsen::NielsenClass const& c, bool pocket)
{
    int const ind = c.index;
    if (c.provenance == nielsen::Provenance::FixedAnnulus)
        return {{WitnessPoint::Kind::Degenerate, 0, 0}};
    if (pocket)
        return {{WitnessPoint::Kind::Nondegenerate, 0, 1}, monkey_saddle(-ind + 2)};
    if (ind < 0)
        return {monkey_saddle(-ind + 1)};
    if (ind == 1)
        return {{WitnessPoint::Kind::Nondegenerate, 0, 1}};
    if (ind > 1)
        return {{WitnessPoint::Kind::Degenerate, 0, ind}};
    return {};
}

struct ClassWitness
{
    std::string class_id;
    std::vector<WitnessPoint> points;
};

inline std::vector<ClassWitness> degenerate_witness(Context const& ctx)
{
    auto const a = compute_A(ctx);
    std::vector<ClassWitness> out;
    for (auto const& c : ctx.classes) {
        bool const pocket = c.provenance == nielsen::Provenance::FixedComponent &&
                            std::find(a.components.begin(), a.components.end(), c.host) != a.components.end();
        out.push_back({c.id, class_witness(c, pocket)});
    }
    return out;
}

inline std::vector<ClassWitness> degenerate_witness(desc::Description const& d) { return degenerate_witness(Context(d)); }

struct ClassReport
{
    std::string id;
    int index = 0;
    std::string provenance;
    std::string host;
    int nondegenerate = 0;
    int degenerate = 0;
    int floer_rank = 0;
    std::vector<std::string> flags;
    std::vector<WitnessPoint> witness;
};

struct BoundsReport
{
    Classification classification = Classification::Reducible;
    std::vector<ClassReport> classes;
    int A = 0;
    std::vector<std::string> A_components;
    int B = 0;
    int reidemeister = 0;
    int essential = 0;
    int theorem1 = 0;
    int theorem2 = 0;
    int floer_total = 0;
    std::string cross_check; // ok | flagged | mismatch
    std::vector<std::string> flags;

    bool flagged(std::string const& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
};

/// Full pipeline on a validated description.
inline BoundsReport analyze(Context const& ctx)
{
    auto const& topo = ctx.topology();
    BoundsReport r;
    r.classification = classification(ctx.expanded);

    auto const a = compute_A(ctx);
    r.A = a.count;
    r.A_components = a.components;
    r.B = compute_B(ctx.expanded);
    r.reidemeister = nielsen::reidemeister_trace(ctx.classes);
    r.essential = nielsen::essential_count(ctx.classes);
    r.theorem1 = r.reidemeister + 2 * r.A;
    r.theorem2 = r.essential + r.A + r.B;

    std::set<std::string> flags;
    std::vector<ClassWitness> witness;
    for (auto const& c : ctx.classes)
        witness.push_back({c.id, class_witness(c, c.provenance == nielsen::Provenance::FixedComponent &&
                                                      std::find(a.components.begin(), a.components.end(), c.host) !=
                                                          a.components.end())});
    for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
        auto const& c = ctx.classes[i];
        ClassReport cr;
        cr.id = c.id;
        cr.index = c.index;
        cr.provenance = nielsen::to_string(c.provenance);
        cr.host = c.host;
        bool const pocket = c.provenance == nielsen::Provenance::FixedComponent &&
                            std::find(a.components.begin(), a.components.end(), c.host) != a.components.end();
        cr.nondegenerate = (c.index < 0 ? -c.index : c.index) + (pocket ? 2 : 0);
        cr.witness = witness[i].points;
        cr.degenerate = static_cast<int>(cr.witness.size());
        cr.floer_rank = static_cast<int>(floer::class_rank(ctx, c));
        if (pocket)
            cr.flags.push_back("pocket");
        if (c.provenance == nielsen::Provenance::FixedComponent) {
            auto const& s = topo.component(c.host);
            if (!c.abutting_iiid.empty() && !uniform_rotation(s, ctx.rotations)) {
                cr.flags.push_back("iiid_with_mixed_rotation");
                flags.insert("iiid_with_mixed_rotation");
            }
            if (faces_rotated_pa(topo, s)) {
                cr.flags.push_back("pa_abutment_without_iiid");
                flags.insert("pa_abutment_without_iiid");
            }
        }
        r.floer_total += cr.floer_rank;
        r.classes.push_back(std::move(cr));
    }
    if (r.classification == Classification::Periodic && r.A > 0)
        flags.insert("periodic_identity_correction");
    r.flags.assign(flags.begin(), flags.end());

    if (r.floer_total == r.theorem1)
        r.cross_check = "ok";
    else if (r.flagged("pa_abutment_without_iiid"))
        r.cross_check = "flagged";
    else
        r.cross_check = "mismatch";
    return r;
}

inline BoundsReport analyze(desc::Description const& d) { return analyze(Context(d)); }

} // namespace fpbound::bounds
