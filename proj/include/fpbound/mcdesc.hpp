#pragma once
/*
 *  Standard-form mapping class descriptions: data model, validation,
 *  twist-multiplicity expansion and boundary rotation signs.
 *
 *  A description lists the components of the surface cut along the reducing
 *  annuli, the annuli themselves (each joining two boundary circles), and the
 *  circles that form the boundary of the whole surface.  Circle ids are global:
 *  every circle belongs to exactly one component.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fpbound/errors.hpp"

namespace fpbound::desc {

enum class Sign : int { Plus = 1, Minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

struct Singularity
{
    int prongs = 3;
    bool rotated = false;
    friend bool operator==(Singularity const&, Singularity const&) = default;
};

struct SmoothFixedPoint
{
    int index = 1; // +1 or -1
    friend bool operator==(SmoothFixedPoint const&, SmoothFixedPoint const&) = default;
};

/// Behaviour of a pseudo-Anosov component at one of its boundary circles.
struct PaBoundary
{
    int prongs = 0;              // unused for a rotated puncture
    bool rotated = false;
    bool rotated_puncture = false;

    /// True when the smoothed boundary carries fixed points.
    bool unrotated() const { return !rotated && !rotated_puncture; }
    friend bool operator==(PaBoundary const&, PaBoundary const&) = default;
};

struct PeriodicPoint
{
    std::string label;
    friend bool operator==(PeriodicPoint const&, PeriodicPoint const&) = default;
};

struct Identity
{
    friend bool operator==(Identity const&, Identity const&) = default;
};

struct Periodic
{
    std::vector<PeriodicPoint> fixed_points;
    friend bool operator==(Periodic const&, Periodic const&) = default;
};

struct PseudoAnosov
{
    std::vector<Singularity> singularities;
    std::vector<SmoothFixedPoint> smooth_fixed_points;
    std::map<std::string, PaBoundary> boundary; // keyed by circle id
    friend bool operator==(PseudoAnosov const&, PseudoAnosov const&) = default;
};

using Behavior = std::variant<Identity, Periodic, PseudoAnosov>;

struct Component
{
    std::string id;
    int genus = 0;
    std::vector<std::string> boundary;
    int return_time = 1;
    Behavior behavior = Identity{};
    std::optional<int> declared_chi;
    bool fixed_annulus = false; // identity annulus between parallel twists

    int euler_characteristic() const { return 2 - 2 * genus - static_cast<int>(boundary.size()); }
    bool is_identity() const { return std::holds_alternative<Identity>(behavior); }
    bool is_periodic() const { return std::holds_alternative<Periodic>(behavior); }
    bool is_pseudo_anosov() const { return std::holds_alternative<PseudoAnosov>(behavior); }
    PseudoAnosov const* pseudo_anosov() const { return std::get_if<PseudoAnosov>(&behavior); }

    /// Setwise fixed, identity, negative Euler characteristic (type Ia host).
    bool is_fixed_identity() const { return return_time == 1 && is_identity() && !fixed_annulus; }

    friend bool operator==(Component const&, Component const&) = default;
};

enum class AnnulusKind { Twist, FlipTwist };

struct Annulus
{
    std::string id;
    std::string left;  // circle on one side
    std::string right; // circle on the other side
    AnnulusKind kind = AnnulusKind::Twist;
    Sign sign = Sign::Plus;
    int multiplicity = 1;
    friend bool operator==(Annulus const&, Annulus const&) = default;
};

struct SurfaceBoundary
{
    std::string circle;
    Sign rotation = Sign::Plus;
    int extra_twists = 0; // signed; a nonzero value must carry the rotation's sign
    friend bool operator==(SurfaceBoundary const&, SurfaceBoundary const&) = default;
};

struct Description
{
    std::vector<Component> components;
    std::vector<Annulus> annuli;
    std::vector<SurfaceBoundary> surface_boundary;

    int euler_characteristic() const
    {
        int chi = 0;
        for (auto const& c : components)
            chi += c.euler_characteristic();
        return chi;
    }

    friend bool operator==(Description const&, Description const&) = default;
};

/// Lookup tables over a description.  Tolerates dangling references so the
/// validator can use it on broken input; accessors throw UnknownId.
class Topology
{
public:
    explicit Topology(Description const& d)
        : desc_(&d)
    {
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            component_index_.emplace(d.components[i].id, i);
            for (auto const& c : d.components[i].boundary)
                owner_.emplace(c, i);
        }
        for (std::size_t i = 0; i < d.annuli.size(); ++i) {
            annulus_at_.emplace(d.annuli[i].left, i);
            annulus_at_.emplace(d.annuli[i].right, i);
        }
        for (std::size_t i = 0; i < d.surface_boundary.size(); ++i)
            surface_at_.emplace(d.surface_boundary[i].circle, i);
    }

    Description const& description() const { return *desc_; }

    bool has_component(std::string const& id) const { return component_index_.count(id) != 0; }
    bool has_circle(std::string const& c) const { return owner_.count(c) != 0; }

    std::size_t component_index(std::string const& id) const
    {
        auto it = component_index_.find(id);
        if (it == component_index_.end())
            throw UnknownId("component", id);
        return it->second;
    }

    Component const& component(std::string const& id) const
    {
        return desc_->components[component_index(id)];
    }

    std::size_t owner_index(std::string const& circle) const
    {
        auto it = owner_.find(circle);
        if (it == owner_.end())
            throw UnknownId("circle", circle);
        return it->second;
    }

    Component const& owner(std::string const& circle) const { return desc_->components[owner_index(circle)]; }

    Annulus const* annulus_at(std::string const& circle) const
    {
        auto it = annulus_at_.find(circle);
        return it == annulus_at_.end() ? nullptr : &desc_->annuli[it->second];
    }

    /// Circle on the far side of the annulus ending at `circle`, if any.
    std::optional<std::string> partner(std::string const& circle) const
    {
        Annulus const* a = annulus_at(circle);
        if (!a)
            return std::nullopt;
        return a->left == circle ? a->right : a->left;
    }

    SurfaceBoundary const* surface_at(std::string const& circle) const
    {
        auto it = surface_at_.find(circle);
        return it == surface_at_.end() ? nullptr : &desc_->surface_boundary[it->second];
    }

    /// Behaviour entry when `circle` bounds a pseudo-Anosov component.
    PaBoundary const* pa_boundary(std::string const& circle) const
    {
        if (!has_circle(circle))
            return nullptr;
        auto const* pa = owner(circle).pseudo_anosov();
        if (!pa)
            return nullptr;
        auto it = pa->boundary.find(circle);
        return it == pa->boundary.end() ? nullptr : &it->second;
    }

    /// True when `circle` is an unrotated boundary of a setwise-fixed
    /// pseudo-Anosov component (a type IIId site).
    bool is_iiid_site(std::string const& circle) const
    {
        if (!has_circle(circle) || owner(circle).return_time != 1)
            return false;
        auto const* b = pa_boundary(circle);
        return b && b->unrotated();
    }

private:
    Description const* desc_;
    std::map<std::string, std::size_t> component_index_;
    std::map<std::string, std::size_t> owner_;
    std::multimap<std::string, std::size_t> annulus_at_;
    std::map<std::string, std::size_t> surface_at_;
};

struct Issue
{
    std::string code;
    std::string message;
    friend bool operator==(Issue const&, Issue const&) = default;
};

struct ValidateOptions
{
    /// Emit W_EULER_POINCARE when declared prongs violate the closed-up
    /// Euler-Poincare count; off by default since undeclared (non-fixed)
    /// singularities are legitimately absent from the inventory.
    bool euler_poincare_warning = false;
};

struct ValidationResult
{
    std::optional<Description> normalized;
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    bool ok() const { return errors.empty(); }
    explicit operator bool() const { return ok(); }

    bool has(std::string const& code) const
    {
        return std::any_of(errors.begin(), errors.end(), [&](Issue const& i) { return i.code == code; }) ||
               std::any_of(warnings.begin(), warnings.end(), [&](Issue const& i) { return i.code == code; });
    }
};

Description expand_twists(Description const& d);

namespace detail {

inline std::string circle_list(std::vector<std::string> const& v)
{
    std::string s;
    for (auto const& x : v)
        s += (s.empty() ? "" : ", ") + x;
    return s;
}

// Rules that are easiest to state on the expanded form (fixed annuli present).
inline void check_expanded(Description const& e, std::vector<Issue>& errors)
{
    Topology const topo(e);
    for (auto const& c : e.components) {
        if (!c.fixed_annulus)
            continue;
        std::vector<Sign> signs;
        for (auto const& circle : c.boundary) {
            if (auto const* a = topo.annulus_at(circle)) {
                if (a->kind == AnnulusKind::FlipTwist) {
                    errors.push_back({"E_FLIP", "fixed annulus '" + c.id + "' abuts flip-twist annulus '" + a->id + "'"});
                    continue;
                }
                signs.push_back(a->sign);
            } else if (auto const* s = topo.surface_at(circle)) {
                signs.push_back(s->rotation);
            }
        }
        if (signs.size() == 2 && signs[0] != signs[1])
            errors.push_back({"E_PARALLEL", "twist regions on either side of fixed annulus '" + c.id +
                                                "' twist in opposite directions"});
    }
    for (auto const& a : e.annuli) {
        if (!topo.has_circle(a.left) || !topo.has_circle(a.right))
            continue;
        for (int side = 0; side < 2; ++side) {
            std::string const& here = side == 0 ? a.left : a.right;
            std::string const& there = side == 0 ? a.right : a.left;
            Component const& owner = topo.owner(here);
            if (owner.fixed_annulus && owner.return_time == 1 && topo.is_iiid_site(there))
                errors.push_back({"E_IB_ABUT", "annulus '" + a.id + "' joins fixed annulus '" + owner.id +
                                                   "' to unrotated pseudo-Anosov boundary '" + there + "'"});
        }
    }
}

} // namespace detail

/// Checks every structural rule; on success `normalized` holds the
/// description as given (it is already in normal form: ids, order and signs
/// are kept verbatim).
inline ValidationResult validate(Description const& d, ValidateOptions const& opts = {})
{
    ValidationResult out;
    auto& errors = out.errors;
    auto err = [&](std::string code, std::string msg) { errors.push_back({std::move(code), std::move(msg)}); };

    // ids and circle ownership
    std::set<std::string> comp_ids, circle_ids, annulus_ids;
    for (auto const& c : d.components) {
        if (c.id.empty())
            err("E_RANGE", "component with empty id");
        if (!comp_ids.insert(c.id).second)
            err("E_DUPLICATE", "component id '" + c.id + "' is declared twice");
        for (auto const& circle : c.boundary)
            if (!circle_ids.insert(circle).second)
                err("E_DUPLICATE", "circle '" + circle + "' belongs to more than one component");
    }
    if (d.components.empty())
        err("E_RANGE", "description has no components");

    Topology const topo(d);

    // per-component rules
    for (auto const& c : d.components) {
        if (c.genus < 0)
            err("E_RANGE", "component '" + c.id + "' has negative genus");
        if (c.return_time < 1)
            err("E_RANGE", "component '" + c.id + "' has return_time < 1");
        int const chi = c.euler_characteristic();
        if (c.declared_chi && *c.declared_chi != chi)
            err("E_CHI", "component '" + c.id + "' declares Euler characteristic " + std::to_string(*c.declared_chi) +
                             " but genus " + std::to_string(c.genus) + " with " + std::to_string(c.boundary.size()) +
                             " boundary circles gives " + std::to_string(chi));
        if (c.fixed_annulus) {
            if (c.genus != 0 || c.boundary.size() != 2 || !c.is_identity())
                err("E_CHI", "fixed annulus '" + c.id + "' must be an identity annulus (genus 0, two circles)");
        } else if (chi >= 0) {
            err("E_CHI", "component '" + c.id + "' has Euler characteristic " + std::to_string(chi) +
                             " (negative required)");
        }

        if (auto const* per = std::get_if<Periodic>(&c.behavior)) {
            if (c.return_time != 1 && !per->fixed_points.empty())
                err("E_INVENTORY", "component '" + c.id + "' has return_time > 1 but declares fixed points");
        }
        if (auto const* pa = c.pseudo_anosov()) {
            for (auto const& s : pa->singularities)
                if (s.prongs < 3)
                    err("E_PRONGS", "component '" + c.id + "' has an interior singularity with " +
                                        std::to_string(s.prongs) + " prongs (at least 3 required)");
            for (auto const& p : pa->smooth_fixed_points)
                if (p.index != 1 && p.index != -1)
                    err("E_RANGE", "component '" + c.id + "' has a smooth fixed point of index " +
                                       std::to_string(p.index));
            for (auto const& [circle, b] : pa->boundary) {
                if (std::find(c.boundary.begin(), c.boundary.end(), circle) == c.boundary.end())
                    err("E_DANGLING", "component '" + c.id + "' describes boundary '" + circle +
                                          "' which is not one of its circles");
                if (!b.rotated_puncture && b.prongs < 1)
                    err("E_PRONGS", "boundary '" + circle + "' of component '" + c.id + "' has " +
                                        std::to_string(b.prongs) + " prongs (at least 1 required)");
            }
            if (c.return_time == 1) {
                for (auto const& circle : c.boundary)
                    if (!pa->boundary.count(circle))
                        err("E_INVENTORY", "pseudo-Anosov component '" + c.id + "' gives no behaviour for boundary '" +
                                               circle + "'");
            } else if (!pa->singularities.empty() || !pa->smooth_fixed_points.empty() ||
                       std::any_of(pa->boundary.begin(), pa->boundary.end(),
                                   [](auto const& kv) { return kv.second.unrotated(); })) {
                err("E_INVENTORY", "component '" + c.id + "' has return_time > 1 but declares fixed points");
            }
            if (opts.euler_poincare_warning && c.return_time == 1) {
                int lhs = 0;
                for (auto const& s : pa->singularities)
                    lhs += 2 - s.prongs;
                for (auto const& [circle, b] : pa->boundary)
                    if (!b.rotated_puncture)
                        lhs -= b.prongs;
                if (lhs != 2 * chi)
                    out.warnings.push_back({"W_EULER_POINCARE", "declared prongs of '" + c.id + "' sum to " +
                                                                    std::to_string(lhs) + ", expected 2*chi = " +
                                                                    std::to_string(2 * chi)});
            }
        }
    }

    // annuli
    std::set<std::string> used_ends;
    for (auto const& a : d.annuli) {
        if (!annulus_ids.insert(a.id).second)
            err("E_DUPLICATE", "annulus id '" + a.id + "' is declared twice");
        if (a.left == a.right)
            err("E_DANGLING", "annulus '" + a.id + "' has both ends on circle '" + a.left + "'");
        bool ends_ok = true;
        for (auto const* end : {&a.left, &a.right}) {
            if (!topo.has_circle(*end)) {
                err("E_DANGLING", "annulus '" + a.id + "' references unknown circle '" + *end + "'");
                ends_ok = false;
            } else if (!used_ends.insert(*end).second) {
                err("E_DANGLING", "circle '" + *end + "' is an end of more than one annulus");
            }
        }
        if (a.multiplicity < 1)
            err("E_RANGE", "annulus '" + a.id + "' has multiplicity < 1");
        if (!ends_ok)
            continue;
        Component const& l = topo.owner(a.left);
        Component const& r = topo.owner(a.right);
        if (a.kind == AnnulusKind::Twist) {
            if (l.return_time != r.return_time)
                err("E_RETURN_TIME", "twist annulus '" + a.id + "' joins components with different return times");
            if (a.multiplicity > 1 && l.return_time != 1)
                err("E_RETURN_TIME", "twist annulus '" + a.id + "' repeats twists between non-fixed components");
        } else {
            if (a.multiplicity != 1)
                err("E_RANGE", "flip-twist annulus '" + a.id + "' must have multiplicity 1");
            if (l.id == r.id) {
                if (l.return_time != 1 || l.is_identity())
                    err("E_FLIP", "flip-twist annulus '" + a.id + "' returns to component '" + l.id +
                                      "', which must be setwise fixed and not the identity");
            } else if (l.return_time < 2 || l.return_time != r.return_time) {
                err("E_FLIP", "flip-twist annulus '" + a.id + "' swaps components '" + l.id + "' and '" + r.id +
                                  "', which must share a return time of at least 2");
            }
            for (auto const* end : {&a.left, &a.right})
                if (auto const* b = topo.pa_boundary(*end); b && b->unrotated())
                    err("E_FLIP", "boundary '" + *end + "' at flip-twist annulus '" + a.id +
                                      "' is swapped, so it cannot be an unrotated prong boundary");
        }
    }

    // surface boundary
    std::set<std::string> declared_free;
    for (auto const& s : d.surface_boundary) {
        if (!topo.has_circle(s.circle)) {
            err("E_DANGLING", "surface boundary references unknown circle '" + s.circle + "'");
            continue;
        }
        if (!declared_free.insert(s.circle).second)
            err("E_DUPLICATE", "surface boundary circle '" + s.circle + "' is listed twice");
        if (used_ends.count(s.circle))
            err("E_DANGLING", "circle '" + s.circle + "' is both a surface boundary and an annulus end");
        if (s.extra_twists != 0 && (s.extra_twists > 0) != (s.rotation == Sign::Plus))
            err("E_PARALLEL", "extra twists at boundary '" + s.circle + "' oppose its rotation direction");
        if (s.extra_twists != 0 && topo.owner(s.circle).return_time != 1)
            err("E_RETURN_TIME", "extra twists at boundary '" + s.circle + "' of a non-fixed component");
    }
    for (auto const& c : d.components)
        for (auto const& circle : c.boundary)
            if (!used_ends.count(circle) && !declared_free.count(circle))
                err("E_DANGLING", "circle '" + circle + "' of component '" + c.id +
                                      "' is neither glued nor declared as surface boundary");

    // connectivity
    if (!d.components.empty()) {
        std::vector<std::size_t> parent(d.components.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto const& a : d.annuli)
            if (topo.has_circle(a.left) && topo.has_circle(a.right))
                parent[find(topo.owner_index(a.left))] = find(topo.owner_index(a.right));
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < parent.size(); ++i)
            roots.insert(find(i));
        if (roots.size() > 1)
            err("E_DISCONNECTED", "the glued surface has " + std::to_string(roots.size()) + " connected pieces");
        if (d.euler_characteristic() >= 0 && errors.empty())
            err("E_CHI", "the glued surface has Euler characteristic " + std::to_string(d.euler_characteristic()) +
                             " (negative required)");
    }

    if (errors.empty())
        detail::check_expanded(expand_twists(d), errors);

    if (errors.empty())
        out.normalized = d;
    return out;
}

/// Replaces each twist of multiplicity m by m parallel twist annuli separated
/// by m-1 fixed annuli, and each extra boundary twist by a twist annulus plus
/// a fixed collar.  Inserted ids extend the original id with '#'.
inline Description expand_twists(Description const& d)
{
    Description out;
    out.components = d.components;
    Topology const topo(d);

    auto add_fixed_annulus = [&](std::string const& id, int return_time) {
        Component f;
        f.id = id;
        f.genus = 0;
        f.boundary = {id + ".in", id + ".out"};
        f.return_time = return_time;
        f.behavior = Identity{};
        f.fixed_annulus = true;
        out.components.push_back(f);
        return f;
    };

    for (auto const& a : d.annuli) {
        if (a.kind != AnnulusKind::Twist || a.multiplicity <= 1) {
            out.annuli.push_back(a);
            continue;
        }
        int const rt = topo.has_circle(a.left) ? topo.owner(a.left).return_time : 1;
        std::string prev = a.left;
        for (int k = 1; k <= a.multiplicity; ++k) {
            Annulus piece = a;
            piece.id = a.id + "#" + std::to_string(k);
            piece.multiplicity = 1;
            piece.left = prev;
            if (k < a.multiplicity) {
                Component const f = add_fixed_annulus(a.id + "#fix" + std::to_string(k), rt);
                piece.right = f.boundary[0];
                prev = f.boundary[1];
            } else {
                piece.right = a.right;
            }
            out.annuli.push_back(piece);
        }
    }

    for (auto const& s : d.surface_boundary) {
        int const n = s.extra_twists < 0 ? -s.extra_twists : s.extra_twists;
        if (n == 0) {
            out.surface_boundary.push_back(s);
            continue;
        }
        std::string prev = s.circle;
        for (int k = 1; k <= n; ++k) {
            Component const f = add_fixed_annulus(s.circle + "#collar" + std::to_string(k), 1);
            Annulus tw;
            tw.id = s.circle + "#tw" + std::to_string(k);
            tw.left = prev;
            tw.right = f.boundary[0];
            tw.kind = AnnulusKind::Twist;
            tw.sign = s.rotation;
            out.annuli.push_back(tw);
            prev = f.boundary[1];
        }
        out.surface_boundary.push_back({prev, s.rotation, 0});
    }
    return out;
}

/// Rotation sign of every boundary end of a setwise-fixed identity component
/// (fixed annuli included), keyed by circle id.  Both ends of a twist annulus
/// take the annulus sign; surface boundary circles take their declared sign.
using RotationAssignment = std::map<std::string, Sign>;

inline RotationAssignment rotation_signs(Description const& expanded)
{
    Topology const topo(expanded);
    RotationAssignment out;
    for (auto const& c : expanded.components) {
        if (c.return_time != 1 || !c.is_identity())
            continue;
        for (auto const& circle : c.boundary) {
            if (auto const* s = topo.surface_at(circle))
                out[circle] = s->rotation;
            else if (auto const* a = topo.annulus_at(circle); a && a->kind == AnnulusKind::Twist)
                out[circle] = a->sign;
        }
    }
    return out;
}

} // namespace fpbound::desc
