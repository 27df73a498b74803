#pragma once
/*
 *  Floer homology oracle for fixed identity components.
 *
 *  A component S is perturbed by a small Morse function.  Extrema sit in even
 *  degree, saddles and the points patched in from abutting prong boundaries in
 *  odd degree.  The differential from a saddle x to the extremum picks up
 *  1 + t^{d_x}, where d_x is the class of the closure of x's descending
 *  manifold in the lattice of S (the image of H1(S) in H1 of the surface
 *  modulo boundary classes).  Ranks are taken over the fraction field of the
 *  GF(2) group ring of that lattice.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpbound/context.hpp"
#include "fpbound/errors.hpp"
#include "fpbound/exactalg.hpp"

namespace fpbound::floer {

using exact::Gf2Matrix;
using exact::Gf2Vector;
using exact::IntMatrix;
using exact::IntVector;
using exact::LaurentMatrix;
using exact::LaurentPoly;

struct Saddle
{
    std::string label;
    IntVector ambient; // class in H1(Sigma)/(torsion + boundary classes)
    IntVector coords;  // the same class in lattice coordinates
    Gf2Vector z2;      // class in H1(S; Z/2)
};

struct IiidPoint
{
    std::string circle;
    int k = 0; // which of the p points on that circle
};

struct MorseModel
{
    std::string component;
    int genus = 0;
    int chi = 0;
    int extrema = 0;
    bool closed = false;
    bool mixed_rotation = false; // ends disagree (only with prong abutment can this keep an extremum)
    std::vector<Saddle> saddles;
    std::vector<IiidPoint> iiid_points;
    IntMatrix lattice; // basis columns, ambient coordinates

    std::size_t nvars() const { return lattice.cols(); }
    std::size_t dimension() const { return static_cast<std::size_t>(extrema) + saddles.size() + iiid_points.size(); }
};

/// Model for a fixed identity component.  `iiid` lists the absorbed prong
/// boundaries across its annuli as (circle, prongs).
inline MorseModel build_morse_model(surfaces::SurfaceHomology const& h, desc::Component const& s,
                                    desc::RotationAssignment const& rotations,
                                    std::vector<std::pair<std::string, int>> const& iiid)
{
    if (!s.is_fixed_identity())
        throw PreconditionError("build_morse_model: '" + s.id + "' is not a fixed identity component");
    MorseModel m;
    m.component = s.id;
    m.genus = s.genus;
    m.chi = s.euler_characteristic();
    m.closed = s.boundary.empty();
    m.lattice = h.component_relative_lattice(s.id);

    std::optional<desc::Sign> first;
    for (auto const& c : s.boundary) {
        auto it = rotations.find(c);
        if (it == rotations.end())
            throw PreconditionError("build_morse_model: no rotation sign for circle '" + c + "'");
        if (first && *first != it->second)
            m.mixed_rotation = true;
        first = it->second;
    }
    if (m.closed)
        m.extrema = 2;
    else if (!iiid.empty() || !m.mixed_rotation)
        m.extrema = 1;
    else
        m.extrema = 0;

    exact::SmithForm const lattice_snf = exact::smith_normal_form(m.lattice);
    std::size_t const b = s.boundary.size();
    std::size_t const z2dim = 2 * static_cast<std::size_t>(s.genus) + (b == 0 ? 0 : b - 1);
    auto add = [&](std::string label, IntVector const& absolute, Gf2Vector z2) {
        Saddle x;
        x.label = std::move(label);
        x.ambient = h.relative(absolute);
        auto c = exact::solve_integer(lattice_snf, x.ambient);
        if (!c)
            throw std::logic_error("descending class of " + x.label + " lies outside the component lattice");
        x.coords = std::move(*c);
        x.z2 = std::move(z2);
        m.saddles.push_back(std::move(x));
    };

    if (m.closed)
        return m; // ranks come from the shortcut

    for (int j = 0; j < s.genus; ++j)
        for (bool bc : {false, true}) {
            Gf2Vector z(z2dim, 0);
            z[2 * static_cast<std::size_t>(j) + (bc ? 1 : 0)] = 1;
            add(s.id + (bc ? ".b" : ".a") + std::to_string(j + 1), h.handle_class(s.id, j, bc), z);
        }
    std::size_t const chain = m.extrema == 1 ? b - 1 : b - 2;
    IntVector partial(h.rank(), 0);
    for (std::size_t i = 0; i < chain; ++i) {
        IntVector const ci = h.curve_class(s.boundary[i]);
        for (std::size_t k = 0; k < partial.size(); ++k)
            partial[k] += ci[k];
        Gf2Vector z(z2dim, 0);
        for (std::size_t k = 0; k <= i; ++k)
            z[2 * static_cast<std::size_t>(s.genus) + k] = 1;
        add(s.id + ".d" + std::to_string(i + 1), partial, z);
    }
    for (auto const& [circle, p] : iiid)
        for (int k = 1; k <= p; ++k)
            m.iiid_points.push_back({circle, k});
    return m;
}

/// Odd generators (saddles, then prong points) by extrema.
inline LaurentMatrix twisted_differential(MorseModel const& m)
{
    if (m.closed)
        throw PreconditionError("twisted_differential: closed components use the rank shortcut");
    std::size_t const rows = m.saddles.size() + m.iiid_points.size();
    LaurentMatrix d(rows, static_cast<std::size_t>(m.extrema), m.nvars());
    if (m.extrema == 0)
        return d;
    for (std::size_t i = 0; i < m.saddles.size(); ++i)
        d.set(i, 0, LaurentPoly::one_plus(m.saddles[i].coords));
    for (std::size_t i = 0; i < m.iiid_points.size(); ++i)
        d.set(m.saddles.size() + i, 0, LaurentPoly::one(m.nvars()));
    return d;
}

inline std::size_t summand_rank(MorseModel const& m)
{
    if (m.closed)
        return static_cast<std::size_t>(-m.chi);
    return m.dimension() - 2 * exact::rank_fraction_field(twisted_differential(m));
}

/// The same model in lattice coordinates changed by the unimodular matrix W
/// (new coordinates = W * old coordinates).
inline MorseModel rebase(MorseModel m, IntMatrix const& w)
{
    if (w.rows() != m.nvars() || w.cols() != m.nvars())
        throw DimensionError("rebase: basis change has the wrong size");
    std::vector<IntVector> inverse_cols;
    for (std::size_t j = 0; j < w.cols(); ++j) {
        IntVector e(w.rows(), 0);
        e[j] = 1;
        auto col = exact::solve_integer(w, e);
        if (!col)
            throw DimensionError("rebase: basis change is not unimodular");
        inverse_cols.push_back(std::move(*col));
    }
    m.lattice = m.lattice * IntMatrix::from_columns(w.rows(), inverse_cols);
    for (auto& x : m.saddles)
        x.coords = w * x.coords;
    return m;
}

/// Floer rank of the summand belonging to one Nielsen class.
inline std::size_t class_rank(Context const& ctx, nielsen::NielsenClass const& c)
{
    using nielsen::Provenance;
    switch (c.provenance) {
    case Provenance::FixedAnnulus:
        return 0;
    case Provenance::FixedComponent: {
        auto const& topo = ctx.topology();
        std::vector<std::pair<std::string, int>> iiid;
        for (auto const& r : c.members)
            if (r.kind == nielsen::FixedPointKind::IIId)
                iiid.emplace_back(r.circle, r.prongs);
        return summand_rank(build_morse_model(ctx.homology, topo.component(c.host), ctx.rotations, iiid));
    }
    default:
        return static_cast<std::size_t>(c.index < 0 ? -c.index : c.index);
    }
}

inline std::size_t total_rank(Context const& ctx)
{
    std::size_t total = 0;
    for (auto const& c : ctx.classes)
        total += class_rank(ctx, c);
    return total;
}

inline std::size_t total_rank(desc::Description const& d) { return total_rank(Context(d)); }

namespace detail {

inline void require_beta_setting(MorseModel const& m)
{
    if (m.closed || m.genus != 0 || m.extrema != 1 || !m.iiid_points.empty())
        throw PreconditionError("beta action needs a genus-0 model with one extremum and no prong points");
}

} // namespace detail

/// Saddles by the single extremum: entry beta(d_x mod 2).
inline Gf2Matrix beta_action(MorseModel const& m, Gf2Vector const& beta)
{
    detail::require_beta_setting(m);
    Gf2Matrix out(m.saddles.size(), 1);
    for (std::size_t i = 0; i < m.saddles.size(); ++i)
        out(i, 0) = exact::gf2_dot(beta, m.saddles[i].z2);
    return out;
}

/// The functional taking d_j to 1 and every other descending class to 0.
inline Gf2Vector dual_functional(MorseModel const& m, std::size_t j)
{
    detail::require_beta_setting(m);
    if (j >= m.saddles.size())
        throw UnknownId("saddle", std::to_string(j));
    std::size_t const dim = m.saddles.empty() ? 0 : m.saddles.front().z2.size();
    Gf2Matrix rows(m.saddles.size(), dim);
    for (std::size_t i = 0; i < m.saddles.size(); ++i)
        for (std::size_t k = 0; k < dim; ++k)
            rows(i, k) = m.saddles[i].z2[k];
    Gf2Vector target(m.saddles.size(), 0);
    target[j] = 1;
    auto beta = exact::gf2_solve(rows, target);
    if (!beta)
        throw std::logic_error("descending classes are not independent mod 2");
    return *beta;
}

/// A functional beta with the chain mapping onto the extremum, searched over the
/// dual basis of the descending classes; none for the zero chain.
inline std::optional<Gf2Vector> exists_beta(MorseModel const& m, Gf2Vector const& chain)
{
    detail::require_beta_setting(m);
    if (chain.size() != m.saddles.size())
        throw DimensionError("exists_beta: chain length does not match the saddle count");
    for (std::size_t j = 0; j < m.saddles.size(); ++j) {
        Gf2Vector beta = dual_functional(m, j);
        Gf2Matrix const action = beta_action(m, beta);
        std::uint8_t image = 0;
        for (std::size_t i = 0; i < chain.size(); ++i)
            image ^= static_cast<std::uint8_t>(chain[i] & action(i, 0));
        if (image)
            return beta;
    }
    return std::nullopt;
}

} // namespace fpbound::floer
