#pragma once
/*
 *  The glued surface as a graph of shells and its integral first homology.
 *
 *  H1 is presented by Mayer-Vietoris.  Each shell of genus g with boundary
 *  circles c_1..c_k contributes generators a_1, b_1, ..., a_g, b_g, c_1, ...,
 *  c_k and the relation c_1 + ... + c_k = 0 (circles carry the induced
 *  boundary orientation).  A gluing reverses orientation, so it contributes
 *  c_left + c_right = 0.  Every gluing outside a spanning tree of the shell
 *  graph adds a free generator for the loop crossing it.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fpbound/errors.hpp"
#include "fpbound/exactalg.hpp"
#include "fpbound/mcdesc.hpp"

namespace fpbound::surfaces {

using exact::Int;
using exact::IntMatrix;
using exact::IntVector;

struct ComponentShell
{
    std::string id;
    int genus = 0;
    std::vector<std::string> boundary;
    bool fixed_annulus = false;

    int euler_characteristic() const { return 2 - 2 * genus - static_cast<int>(boundary.size()); }
};

struct Gluing
{
    std::string annulus;
    std::string left;
    std::string right;
};

struct DecompositionGraph
{
    std::vector<ComponentShell> shells;
    std::vector<Gluing> gluings;
    std::vector<std::string> free_boundary;

    int euler_characteristic() const
    {
        int chi = 0;
        for (auto const& s : shells)
            chi += s.euler_characteristic();
        return chi;
    }

    /// Genus of the glued (connected) surface.
    int genus() const { return (2 - euler_characteristic() - static_cast<int>(free_boundary.size())) / 2; }

    std::size_t shell_index(std::string const& id) const
    {
        for (std::size_t i = 0; i < shells.size(); ++i)
            if (shells[i].id == id)
                return i;
        throw UnknownId("shell", id);
    }
};

/// Shells for every component of the expanded description, one gluing per
/// annulus, and the declared surface boundary.
inline DecompositionGraph build_graph(desc::Description const& d)
{
    desc::Description const e = desc::expand_twists(d);
    DecompositionGraph g;
    std::map<std::string, bool> seen;
    for (auto const& c : e.components) {
        g.shells.push_back({c.id, c.genus, c.boundary, c.fixed_annulus});
        for (auto const& circle : c.boundary)
            seen[circle] = false;
    }
    auto touch = [&](std::string const& circle) {
        auto it = seen.find(circle);
        if (it == seen.end())
            throw UnknownId("circle", circle);
        if (it->second)
            throw DimensionError("circle '" + circle + "' is used twice");
        it->second = true;
    };
    for (auto const& a : e.annuli) {
        touch(a.left);
        touch(a.right);
        g.gluings.push_back({a.id, a.left, a.right});
    }
    for (auto const& s : e.surface_boundary) {
        touch(s.circle);
        g.free_boundary.push_back(s.circle);
    }
    return g;
}

struct H1Presentation
{
    std::vector<std::string> generators;
    IntMatrix relations; // one row per relation, one column per generator
    std::vector<std::string> dual_loops; // annulus ids whose loops are free generators
};

class SurfaceHomology
{
public:
    explicit SurfaceHomology(DecompositionGraph graph)
        : graph_(std::move(graph))
    {
        build_presentation();
        reduce();
    }

    DecompositionGraph const& graph() const { return graph_; }
    H1Presentation const& presentation() const { return pres_; }

    /// Rank of H1(Sigma; Z).
    std::size_t rank() const { return rank_; }

    /// Rank of the image of H1(Sigma) in H1(Sigma, boundary).
    std::size_t relative_rank() const { return rel_rank_; }

    IntVector generator_class(std::size_t gen) const
    {
        IntVector x(pres_.generators.size(), 0);
        x[gen] = 1;
        return absolute(x);
    }

    /// Class in H1(Sigma)/torsion of a circle with its induced orientation.
    IntVector curve_class(std::string const& circle) const { return generator_class(circle_generator(circle)); }

    /// Class of the j-th a- or b-curve of a shell.
    IntVector handle_class(std::string const& shell, int j, bool b_curve) const
    {
        auto it = handle_base_.find(shell);
        if (it == handle_base_.end())
            throw UnknownId("shell", shell);
        if (j < 0 || j >= graph_.shells[graph_.shell_index(shell)].genus)
            throw UnknownId("handle of " + shell, std::to_string(j));
        return generator_class(it->second + 2 * static_cast<std::size_t>(j) + (b_curve ? 1 : 0));
    }

    /// Image of an absolute class in H1(Sigma) / span of boundary classes.
    IntVector relative(IntVector const& absolute_class) const
    {
        IntVector y = exact::row_times(absolute_class, rel_transform_);
        return IntVector(y.begin() + static_cast<std::ptrdiff_t>(rel_offset_), y.end());
    }

    IntVector relative_class(std::string const& circle) const { return relative(curve_class(circle)); }

    /// Free boundary classes as columns.
    IntMatrix boundary_span() const
    {
        std::vector<IntVector> cols;
        for (auto const& c : graph_.free_boundary)
            cols.push_back(curve_class(c));
        return IntMatrix::from_columns(rank_, cols);
    }

    bool is_null_rel_boundary(std::string const& circle) const
    {
        IntVector const c = curve_class(circle);
        if (rel_saturated_) {
            IntVector const r = relative(c);
            return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
        }
        return exact::in_integer_span(c, boundary_span());
    }

    /// Basis (columns) of the image of H1(S) in H1(Sigma)/torsion.
    IntMatrix component_image_lattice(std::string const& shell) const
    {
        return exact::column_basis(IntMatrix::from_columns(rank_, shell_classes(shell, false)));
    }

    /// Basis (columns) of the image of H1(S) in H1(Sigma)/(torsion + boundary span).
    IntMatrix component_relative_lattice(std::string const& shell) const
    {
        return exact::column_basis(IntMatrix::from_columns(rel_rank_, shell_classes(shell, true)));
    }

private:
    std::size_t circle_generator(std::string const& circle) const
    {
        auto it = circle_gen_.find(circle);
        if (it == circle_gen_.end())
            throw UnknownId("circle", circle);
        return it->second;
    }

    std::vector<IntVector> shell_classes(std::string const& shell, bool rel) const
    {
        auto const& s = graph_.shells[graph_.shell_index(shell)];
        std::vector<IntVector> cols;
        auto push = [&](IntVector v) { cols.push_back(rel ? relative(v) : std::move(v)); };
        for (int j = 0; j < s.genus; ++j) {
            push(handle_class(shell, j, false));
            push(handle_class(shell, j, true));
        }
        for (auto const& c : s.boundary)
            push(curve_class(c));
        return cols;
    }

    IntVector absolute(IntVector const& x) const
    {
        IntVector y = exact::row_times(x, transform_);
        return IntVector(y.begin() + static_cast<std::ptrdiff_t>(offset_), y.end());
    }

    void build_presentation()
    {
        auto& gens = pres_.generators;
        for (auto const& s : graph_.shells) {
            handle_base_[s.id] = gens.size();
            for (int j = 1; j <= s.genus; ++j) {
                gens.push_back(s.id + ".a" + std::to_string(j));
                gens.push_back(s.id + ".b" + std::to_string(j));
            }
            for (auto const& c : s.boundary) {
                if (!circle_gen_.emplace(c, gens.size()).second)
                    throw DimensionError("circle '" + c + "' belongs to two shells");
                gens.push_back(c);
            }
        }

        // spanning forest of the shell graph; the remaining gluings carry dual loops
        std::map<std::string, std::size_t> owner;
        for (std::size_t i = 0; i < graph_.shells.size(); ++i)
            for (auto const& c : graph_.shells[i].boundary)
                owner[c] = i;
        std::vector<std::size_t> parent(graph_.shells.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto const& gl : graph_.gluings) {
            auto l = owner.find(gl.left), r = owner.find(gl.right);
            if (l == owner.end())
                throw UnknownId("circle", gl.left);
            if (r == owner.end())
                throw UnknownId("circle", gl.right);
            std::size_t a = find(l->second), b = find(r->second);
            if (a == b) {
                pres_.dual_loops.push_back(gl.annulus);
                gens.push_back("loop:" + gl.annulus);
            } else {
                parent[a] = b;
            }
        }

        std::size_t const n = gens.size();
        std::vector<IntVector> rows;
        for (auto const& s : graph_.shells) {
            IntVector r(n, 0);
            for (auto const& c : s.boundary)
                r[circle_gen_.at(c)] += 1;
            rows.push_back(r);
        }
        for (auto const& gl : graph_.gluings) {
            IntVector r(n, 0);
            r[circle_gen_.at(gl.left)] += 1;
            r[circle_gen_.at(gl.right)] += 1;
            rows.push_back(r);
        }
        pres_.relations = IntMatrix(rows.size(), n);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                pres_.relations(i, j) = rows[i][j];
    }

    // Z^n / rowspace(R): with U R V = D, x -> x V sends the relation lattice to
    // the first r coordinates (scaled by the invariants).  Dropping those
    // coordinates discards the killed generators and any torsion.
    void reduce()
    {
        std::size_t const n = pres_.generators.size();
        if (pres_.relations.rows() == 0) {
            transform_ = IntMatrix::identity(n);
            offset_ = 0;
        } else {
            auto snf = exact::smith_normal_form(pres_.relations);
            transform_ = std::move(snf.V);
            offset_ = snf.rank();
        }
        rank_ = n - offset_;

        std::vector<IntVector> rows;
        for (auto const& c : graph_.free_boundary)
            rows.push_back(curve_class(c));
        if (rows.empty()) {
            rel_transform_ = IntMatrix::identity(rank_);
            rel_offset_ = 0;
        } else {
            IntMatrix b(rows.size(), rank_);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rank_; ++j)
                    b(i, j) = rows[i][j];
            auto snf = exact::smith_normal_form(b);
            rel_saturated_ = std::all_of(snf.invariants.begin(), snf.invariants.end(), [](Int x) { return x == 1; });
            rel_transform_ = std::move(snf.V);
            rel_offset_ = snf.rank();
        }
        rel_rank_ = rank_ - rel_offset_;
    }

    DecompositionGraph graph_;
    H1Presentation pres_;
    std::map<std::string, std::size_t> circle_gen_;
    std::map<std::string, std::size_t> handle_base_;
    IntMatrix transform_;
    std::size_t offset_ = 0;
    std::size_t rank_ = 0;
    IntMatrix rel_transform_;
    std::size_t rel_offset_ = 0;
    std::size_t rel_rank_ = 0;
    bool rel_saturated_ = true; // boundary span is a direct summand, so membership = zero relative class
};

inline H1Presentation h1_presentation(DecompositionGraph const& g) { return SurfaceHomology(g).presentation(); }

inline IntVector curve_class(DecompositionGraph const& g, std::string const& circle)
{
    return SurfaceHomology(g).curve_class(circle);
}

inline bool is_null_rel_boundary(DecompositionGraph const& g, std::string const& circle)
{
    return SurfaceHomology(g).is_null_rel_boundary(circle);
}

inline IntMatrix component_image_lattice(DecompositionGraph const& g, std::string const& shell)
{
    return SurfaceHomology(g).component_image_lattice(shell);
}

} // namespace fpbound::surfaces
