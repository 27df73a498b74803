#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "fpbound/corpus.hpp"
#include "fpbound/surfaces.hpp"

using namespace fpbound;
using namespace fpbound::surfaces;
using exact::IntMatrix;
using exact::IntVector;

namespace {

bool is_zero(IntVector const& v)
{
    return std::all_of(v.begin(), v.end(), [](exact::Int x) { return x == 0; });
}

IntVector negate_sum(IntVector a, IntVector const& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = -(a[i] + b[i]);
    return a;
}

desc::Description self_glued_torus() { return fixtures::load("self_glued_torus.json"); }

} // namespace

TEST(Graph, PantsPocketCounts)
{
    auto const g = build_graph(fixtures::pants_pocket());
    EXPECT_EQ(g.shells.size(), 3u);
    EXPECT_EQ(g.gluings.size(), 2u);
    EXPECT_EQ(g.free_boundary.size(), 1u);
    EXPECT_EQ(g.genus(), 2);
}

TEST(Graph, ClosedGenusTwo)
{
    auto const g = build_graph(fixtures::closed_genus2_identity());
    EXPECT_EQ(g.shells.size(), 1u);
    EXPECT_TRUE(g.gluings.empty());
    EXPECT_TRUE(g.free_boundary.empty());
}

TEST(Graph, DoubleTwistInsertsFixedAnnulus)
{
    auto const g = build_graph(fixtures::double_twist());
    ASSERT_EQ(g.shells.size(), 3u);
    EXPECT_EQ(g.gluings.size(), 2u);
    int tori = 0, annuli = 0;
    for (auto const& s : g.shells) {
        tori += s.genus == 1 && s.boundary.size() == 1;
        annuli += s.fixed_annulus && s.genus == 0 && s.boundary.size() == 2;
    }
    EXPECT_EQ(tori, 2);
    EXPECT_EQ(annuli, 1);
    EXPECT_EQ(g.euler_characteristic(), -2);
}

TEST(Presentation, OneHoledTorus)
{
    auto const p = h1_presentation(build_graph(fixtures::one_holed_torus()));
    EXPECT_EQ(p.generators, (std::vector<std::string>{"T.a1", "T.b1", "t"}));
    ASSERT_EQ(p.relations.rows(), 1u);
    EXPECT_EQ(p.relations.row(0), (IntVector{0, 0, 1}));
}

TEST(Presentation, Pants)
{
    auto const p = h1_presentation(build_graph(fixtures::pants_alone()));
    EXPECT_EQ(p.generators, (std::vector<std::string>{"c1", "c2", "c3"}));
    ASSERT_EQ(p.relations.rows(), 1u);
    EXPECT_EQ(p.relations.row(0), (IntVector{1, 1, 1}));
}

TEST(Presentation, PantsPocketShape)
{
    auto const p = h1_presentation(build_graph(fixtures::pants_pocket()));
    EXPECT_EQ(p.generators.size(), 9u);
    EXPECT_EQ(p.relations.rows(), 5u);
    EXPECT_TRUE(p.dual_loops.empty());
}

TEST(Presentation, SelfGluingAddsDualLoop)
{
    auto const p = h1_presentation(build_graph(self_glued_torus()));
    EXPECT_EQ(p.dual_loops, (std::vector<std::string>{"N"}));
}

TEST(Homology, Ranks)
{
    EXPECT_EQ(SurfaceHomology(build_graph(fixtures::pants_pocket())).rank(), 4u);
    EXPECT_EQ(SurfaceHomology(build_graph(fixtures::double_twist())).rank(), 4u);
    EXPECT_EQ(SurfaceHomology(build_graph(self_glued_torus())).rank(), 4u);
    EXPECT_EQ(SurfaceHomology(build_graph(fixtures::pants_alone())).rank(), 2u);
    EXPECT_EQ(SurfaceHomology(build_graph(fixtures::pants_alone())).relative_rank(), 0u);
}

TEST(Homology, SeparatingCircleIsZero)
{
    auto const g = build_graph(fixtures::double_twist());
    EXPECT_TRUE(is_zero(curve_class(g, "t1")));
    EXPECT_TRUE(is_zero(curve_class(g, "t2")));
    EXPECT_TRUE(is_null_rel_boundary(g, "t1"));
}

TEST(Homology, NonSeparatingCircleIsNonZero)
{
    auto const g = build_graph(self_glued_torus());
    EXPECT_FALSE(is_zero(curve_class(g, "x")));
    EXPECT_FALSE(is_null_rel_boundary(g, "x"));
    EXPECT_FALSE(is_null_rel_boundary(g, "y"));
}

TEST(Homology, FreeBoundaryIsMinusSumOfOthers)
{
    auto const g = build_graph(fixtures::pants_alone());
    SurfaceHomology const h(g);
    EXPECT_EQ(h.curve_class("c3"), negate_sum(h.curve_class("c1"), h.curve_class("c2")));
    EXPECT_FALSE(is_zero(h.curve_class("c3")));

    SurfaceHomology const pocket(build_graph(fixtures::pants_pocket()));
    EXPECT_EQ(pocket.curve_class("p3"), negate_sum(pocket.curve_class("p1"), pocket.curve_class("p2")));
}

TEST(Homology, BoundaryCircleIsNullRelativeToBoundary)
{
    auto const g = build_graph(fixtures::pants_alone());
    for (auto const* c : {"c1", "c2", "c3"})
        EXPECT_TRUE(is_null_rel_boundary(g, c));
    EXPECT_TRUE(is_null_rel_boundary(build_graph(fixtures::pants_pocket()), "p3"));
}

TEST(Lattice, PantsPocket)
{
    auto const g = build_graph(fixtures::pants_pocket());
    EXPECT_EQ(component_image_lattice(g, "T1").cols(), 2u);
    EXPECT_EQ(component_image_lattice(g, "T2").cols(), 2u);
    EXPECT_EQ(component_image_lattice(g, "P").cols(), 0u); // every end of P bounds
}

TEST(Lattice, RelativeDropsBoundaryParallelClasses)
{
    SurfaceHomology const h(build_graph(fixtures::pants_alone()));
    EXPECT_EQ(h.component_image_lattice("P").cols(), 2u);
    EXPECT_EQ(h.component_relative_lattice("P").cols(), 0u);
}

TEST(Lattice, GenusZeroShellIsSpannedByItsCircles)
{
    SurfaceHomology const h(build_graph(fixtures::pants_alone()));
    IntMatrix const circles = IntMatrix::from_columns(h.rank(), {h.curve_class("c1"), h.curve_class("c2"), h.curve_class("c3")});
    IntMatrix const lattice = h.component_image_lattice("P");
    for (std::size_t j = 0; j < lattice.cols(); ++j)
        EXPECT_TRUE(exact::in_integer_span(lattice.column(j), circles));
    for (std::size_t j = 0; j < circles.cols(); ++j)
        EXPECT_TRUE(exact::in_integer_span(circles.column(j), lattice));
}

TEST(Lattice, UnknownShell)
{
    auto const g = build_graph(fixtures::pants_pocket());
    EXPECT_THROW(component_image_lattice(g, "nope"), UnknownId);
    EXPECT_THROW(curve_class(g, "nope"), UnknownId);
}

// Over a small corpus: chi additivity, the rank formula, and the relative rank.
TEST(HomologyProperty, RankFormulaOnCorpus)
{
    corpus::CorpusConfig cfg;
    cfg.max_components = 3;
    cfg.labelings_by_components = {0, 2, 2, 1};
    std::size_t seen = 0;
    corpus::for_each_instance(cfg, [&](std::string const& name, desc::Description const& d) {
        ++seen;
        auto const g = build_graph(d);
        SurfaceHomology const h(g);
        int const genus = g.genus();
        int const b = static_cast<int>(g.free_boundary.size());
        ASSERT_EQ(g.euler_characteristic(), d.euler_characteristic()) << name;
        ASSERT_EQ(static_cast<int>(h.rank()), 2 * genus + std::max(0, b - 1)) << name;
        ASSERT_EQ(static_cast<int>(h.relative_rank()), 2 * genus) << name;
    });
    EXPECT_GT(seen, 1000u);
}

// Renaming every circle and shell, and reversing listing orders, keeps every nullity answer.
TEST(HomologyProperty, NullityIsInvariantUnderRelabeling)
{
    for (auto const& d : {fixtures::pants_pocket(), fixtures::double_twist(), self_glued_torus(),
                          fixtures::load("pa_pocket_merge.json")}) {
        desc::Description r = d;
        auto rename = [](std::string const& s) { return "z_" + s; };
        for (auto& c : r.components) {
            c.id = rename(c.id);
            for (auto& b : c.boundary)
                b = rename(b);
            std::reverse(c.boundary.begin(), c.boundary.end());
            if (auto* pa = std::get_if<desc::PseudoAnosov>(&c.behavior)) {
                std::map<std::string, desc::PaBoundary> m;
                for (auto const& [k, v] : pa->boundary)
                    m[rename(k)] = v;
                pa->boundary = m;
            }
        }
        std::reverse(r.components.begin(), r.components.end());
        for (auto& a : r.annuli) {
            std::swap(a.left, a.right);
            a.left = rename(a.left);
            a.right = rename(a.right);
        }
        for (auto& s : r.surface_boundary)
            s.circle = rename(s.circle);

        auto const g = build_graph(d);
        auto const gr = build_graph(r);
        SurfaceHomology const h(g), hr(gr);
        EXPECT_EQ(h.rank(), hr.rank());
        for (auto const& comp : d.components)
            for (auto const& c : comp.boundary)
                EXPECT_EQ(h.is_null_rel_boundary(c), hr.is_null_rel_boundary(rename(c))) << c;
    }
}
