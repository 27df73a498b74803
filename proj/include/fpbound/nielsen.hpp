#pragma once
/*
 *  Fixed points of a standard-form map, grouped into Nielsen classes.
 *
 *  Classes are combinatorial: every record is its own class except that an
 *  unrotated prong boundary merges with whatever sits across its annulus when
 *  that is another unrotated prong boundary or a fixed identity component.
 */

#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "fpbound/mcdesc.hpp"

namespace fpbound::nielsen {

enum class FixedPointKind { Ia, Ib, IIa, IIb, IIIa, IIIb, IIIc, IIId };

inline char const* to_string(FixedPointKind k)
{
    switch (k) {
    case FixedPointKind::Ia: return "Ia";
    case FixedPointKind::Ib: return "Ib";
    case FixedPointKind::IIa: return "IIa";
    case FixedPointKind::IIb: return "IIb";
    case FixedPointKind::IIIa: return "IIIa";
    case FixedPointKind::IIIb: return "IIIb";
    case FixedPointKind::IIIc: return "IIIc";
    case FixedPointKind::IIId: return "IIId";
    }
    return "?";
}

struct FixedPointRecord
{
    FixedPointKind kind;
    std::string host;   // component id, or annulus id for IIb
    std::string circle; // IIId only
    std::string label;  // distinguishes points on the same host
    int prongs = 0;     // IIIb, IIId
    int count = 0;      // geometric points; 0 for Ia/Ib (the whole component)
    int index_each = 0;
    int chi = 0; // Ia, Ib

    /// Contribution to the index of the enclosing class.
    int total_index() const
    {
        if (kind == FixedPointKind::Ia || kind == FixedPointKind::Ib)
            return chi;
        return count * index_each;
    }
};

/// Records for the expanded description, in component order then annulus order.
inline std::vector<FixedPointRecord> enumerate_fixed_points(desc::Description const& expanded)
{
    using K = FixedPointKind;
    std::vector<FixedPointRecord> out;
    for (auto const& c : expanded.components) {
        if (c.return_time != 1)
            continue;
        if (c.fixed_annulus) {
            out.push_back({K::Ib, c.id, "", "", 0, 0, 0, 0});
            continue;
        }
        if (c.is_identity()) {
            out.push_back({K::Ia, c.id, "", "", 0, 0, 0, c.euler_characteristic()});
        } else if (auto const* per = std::get_if<desc::Periodic>(&c.behavior)) {
            for (std::size_t i = 0; i < per->fixed_points.size(); ++i) {
                auto const& label = per->fixed_points[i].label;
                out.push_back({K::IIa, c.id, "", label.empty() ? "p" + std::to_string(i + 1) : label, 0, 1, 1, 0});
            }
        } else if (auto const* pa = c.pseudo_anosov()) {
            for (std::size_t i = 0; i < pa->smooth_fixed_points.size(); ++i)
                out.push_back({K::IIIa, c.id, "", "x" + std::to_string(i + 1), 0, 1,
                               pa->smooth_fixed_points[i].index, 0});
            for (std::size_t i = 0; i < pa->singularities.size(); ++i) {
                auto const& s = pa->singularities[i];
                std::string const label = "s" + std::to_string(i + 1);
                if (s.rotated)
                    out.push_back({K::IIIc, c.id, "", label, s.prongs, 1, 1, 0});
                else
                    out.push_back({K::IIIb, c.id, "", label, s.prongs, s.prongs - 1, -1, 0});
            }
            for (auto const& circle : c.boundary) {
                auto it = pa->boundary.find(circle);
                if (it != pa->boundary.end() && it->second.unrotated())
                    out.push_back({K::IIId, c.id, circle, circle, it->second.prongs, it->second.prongs, -1, 0});
            }
        }
    }

    desc::Topology const topo(expanded);
    for (auto const& a : expanded.annuli) {
        if (a.kind != desc::AnnulusKind::FlipTwist)
            continue;
        auto const& l = topo.owner(a.left);
        auto const& r = topo.owner(a.right);
        bool const setwise_fixed = l.id == r.id ? l.return_time == 1 : l.return_time == 2 && r.return_time == 2;
        if (!setwise_fixed)
            continue;
        out.push_back({K::IIb, a.id, "", "1", 0, 1, 1, 0});
        out.push_back({K::IIb, a.id, "", "2", 0, 1, 1, 0});
    }
    return out;
}

enum class Provenance { FixedComponent, FixedAnnulus, Isolated, SingularityCluster, BoundaryCluster };

inline char const* to_string(Provenance p)
{
    switch (p) {
    case Provenance::FixedComponent: return "fixed_component";
    case Provenance::FixedAnnulus: return "fixed_annulus";
    case Provenance::Isolated: return "isolated";
    case Provenance::SingularityCluster: return "singularity_cluster";
    case Provenance::BoundaryCluster: return "boundary_cluster";
    }
    return "?";
}

struct NielsenClass
{
    std::string id;
    std::vector<FixedPointRecord> members;
    int index = 0;
    Provenance provenance = Provenance::Isolated;
    std::string host;                       // component (or annulus) the class lives on
    std::vector<std::string> abutting_iiid; // FixedComponent: absorbed prong boundaries

    int abutting_prongs() const
    {
        int p = 0;
        for (auto const& m : members)
            if (m.kind == FixedPointKind::IIId)
                p += m.prongs;
        return p;
    }
};

inline int class_index(NielsenClass const& c)
{
    int s = 0;
    for (auto const& m : c.members)
        s += m.total_index();
    return s;
}

inline std::vector<NielsenClass> group_nielsen_classes(std::vector<FixedPointRecord> const& records,
                                                       desc::Description const& expanded)
{
    using K = FixedPointKind;
    desc::Topology const topo(expanded);

    std::vector<std::size_t> parent(records.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };

    std::map<std::string, std::size_t> ia_by_component, iiid_by_circle;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].kind == K::Ia)
            ia_by_component[records[i].host] = i;
        if (records[i].kind == K::IIId)
            iiid_by_circle[records[i].circle] = i;
    }
    for (auto const& [circle, i] : iiid_by_circle) {
        auto other = topo.partner(circle);
        if (!other)
            continue;
        if (auto it = iiid_by_circle.find(*other); it != iiid_by_circle.end())
            unite(i, it->second);
        else if (auto jt = ia_by_component.find(topo.owner(*other).id); jt != ia_by_component.end())
            unite(i, jt->second);
    }

    std::vector<NielsenClass> out;
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::size_t const root = find(i);
        auto [it, fresh] = class_of_root.emplace(root, out.size());
        if (fresh) {
            out.emplace_back();
            out.back().id = "eta" + std::to_string(out.size());
        }
        out[it->second].members.push_back(records[i]);
    }
    for (auto& c : out) {
        c.index = class_index(c);
        c.host = c.members.front().host;
        bool has_ia = false, has_ib = false, has_iiib = false, has_iiid = false;
        for (auto const& m : c.members) {
            has_ia |= m.kind == K::Ia;
            has_ib |= m.kind == K::Ib;
            has_iiib |= m.kind == K::IIIb;
            has_iiid |= m.kind == K::IIId;
            if (m.kind == K::Ia)
                c.host = m.host;
        }
        if (has_ia) {
            c.provenance = Provenance::FixedComponent;
            for (auto const& m : c.members)
                if (m.kind == K::IIId)
                    c.abutting_iiid.push_back(m.circle);
        } else if (has_ib) {
            c.provenance = Provenance::FixedAnnulus;
        } else if (has_iiid) {
            c.provenance = Provenance::BoundaryCluster;
        } else if (has_iiib) {
            c.provenance = Provenance::SingularityCluster;
        } else {
            c.provenance = Provenance::Isolated;
        }
    }
    return out;
}

inline int reidemeister_trace(std::vector<NielsenClass> const& classes)
{
    int s = 0;
    for (auto const& c : classes)
        s += c.index < 0 ? -c.index : c.index;
    return s;
}

inline int essential_count(std::vector<NielsenClass> const& classes)
{
    int n = 0;
    for (auto const& c : classes)
        n += c.index != 0;
    return n;
}

} // namespace fpbound::nielsen
