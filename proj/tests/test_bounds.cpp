#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "fpbound/bounds.hpp"
#include "fpbound/corpus.hpp"
#include "fpbound/selfcheck.hpp"

using namespace fpbound;
using namespace fpbound::bounds;

namespace {

using Kind = WitnessPoint::Kind;

int index_sum(std::vector<WitnessPoint> const& pts)
{
    int s = 0;
    for (auto const& p : pts)
        s += p.index;
    return s;
}

/// Pants whose first end faces a pseudo-Anosov torus across a twist of the
/// given multiplicity; the torus boundary is rotated.
desc::Description pants_facing_rotated_pa(int multiplicity)
{
    return fixtures::parse(R"({
      "components": [
        {"id": "P", "genus": 0, "boundary": ["p1", "p2", "p3"], "behavior": {"type": "identity"}},
        {"id": "Q", "genus": 1, "boundary": ["q"], "behavior": {"type": "pseudo_anosov",
          "singularities": [{"prongs": 3, "rotated": true}], "boundary": {"q": {"prongs": 1, "rotated": true}}}},
        {"id": "T", "genus": 1, "boundary": ["t"], "behavior": {"type": "identity"}}
      ],
      "annuli": [
        {"id": "A1", "ends": ["p1", "q"], "sign": "+1", "multiplicity": )" +
                           std::to_string(multiplicity) + R"(},
        {"id": "A2", "ends": ["p2", "t"], "sign": "+1"}
      ],
      "surface_boundary": [{"circle": "p3", "rotation": "+1"}]
    })");
}

} // namespace

TEST(Classification, ShapeRule)
{
    EXPECT_EQ(classification(fixtures::genus2_pa()), Classification::PseudoAnosov);
    EXPECT_EQ(classification(fixtures::closed_genus2_identity()), Classification::Periodic);
    EXPECT_EQ(classification(fixtures::pants_pocket()), Classification::Reducible);
    EXPECT_EQ(classification(fixtures::double_twist()), Classification::Reducible);
}

TEST(CountA, Examples)
{
    auto const a = compute_A(Context(fixtures::pants_pocket()));
    EXPECT_EQ(a.count, 1);
    EXPECT_EQ(a.components, (std::vector<std::string>{"P"}));
    EXPECT_EQ(compute_A(Context(fixtures::double_twist())).count, 0);
    EXPECT_EQ(compute_A(Context(fixtures::pants_with_signs("+1", "-1", "+1"))).count, 0);
    EXPECT_EQ(compute_A(Context(fixtures::pants_with_signs("-1", "-1", "-1"))).count, 1);
}

TEST(CountA, PseudoAnosovNeighbourExcludes)
{
    EXPECT_EQ(compute_A(Context(fixtures::load("pa_pocket_merge.json"))).count, 0);
    EXPECT_EQ(compute_A(Context(pants_facing_rotated_pa(1))).count, 0);
    // the neighbour is still the pA torus when a fixed annulus sits in between
    EXPECT_EQ(compute_A(Context(pants_facing_rotated_pa(2))).count, 0);
}

TEST(CountA, NonNullBoundaryExcludes)
{
    auto const d = fixtures::parse(R"({
      "components": [{"id": "P", "genus": 0, "boundary": ["a", "b", "c", "d"], "behavior": {"type": "identity"}}],
      "annuli": [{"id": "N", "ends": ["a", "b"], "sign": "+1"}],
      "surface_boundary": [{"circle": "c", "rotation": "+1"}, {"circle": "d", "rotation": "+1"}]
    })");
    EXPECT_EQ(compute_A(Context(d)).count, 0);
}

TEST(CountB, Examples)
{
    EXPECT_EQ(compute_B(desc::expand_twists(fixtures::double_twist())), 1);
    EXPECT_EQ(compute_B(desc::expand_twists(fixtures::pants_pocket())), 0);
    auto d = fixtures::double_twist();
    d.annuli[0].multiplicity = 3;
    EXPECT_EQ(compute_B(desc::expand_twists(d)), 2);
}

TEST(Theorems, WorkedExamples)
{
    EXPECT_EQ(theorem1_bound(fixtures::pants_pocket()), 5);
    EXPECT_EQ(theorem2_bound(fixtures::pants_pocket()), 4);
    EXPECT_EQ(theorem1_bound(fixtures::double_twist()), 2);
    EXPECT_EQ(theorem2_bound(fixtures::double_twist()), 3);
    EXPECT_EQ(theorem1_bound(fixtures::genus2_pa()), 8);
    EXPECT_EQ(theorem2_bound(fixtures::genus2_pa()), 4);
}

TEST(Theorems, ClosedIdentity)
{
    EXPECT_EQ(theorem1_bound(fixtures::closed_genus2_identity()), 2);
    EXPECT_EQ(theorem2_bound(fixtures::closed_genus2_identity()), 1);
}

TEST(Witness, PocketClass)
{
    Context const ctx(fixtures::pants_pocket());
    for (auto const& w : degenerate_witness(ctx)) {
        auto const& c = *std::find_if(ctx.classes.begin(), ctx.classes.end(),
                                      [&](auto const& k) { return k.id == w.class_id; });
        EXPECT_EQ(index_sum(w.points), c.index);
        if (c.host == "P") {
            ASSERT_EQ(w.points.size(), 2u);
            EXPECT_EQ(w.points[0], (WitnessPoint{Kind::Nondegenerate, 0, 1}));
            EXPECT_EQ(w.points[1], monkey_saddle(3));
        } else {
            EXPECT_EQ(w.points, (std::vector<WitnessPoint>{monkey_saddle(2)}));
        }
    }
}

TEST(Witness, SixProngCluster)
{
    nielsen::NielsenClass c;
    c.index = -5;
    c.provenance = nielsen::Provenance::SingularityCluster;
    auto const w = class_witness(c, false);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], monkey_saddle(6));
    EXPECT_EQ(w[0].index, -5);
}

TEST(Witness, IndexOne)
{
    nielsen::NielsenClass c;
    c.index = 1;
    EXPECT_EQ(class_witness(c, false), (std::vector<WitnessPoint>{{Kind::Nondegenerate, 0, 1}}));
}

TEST(Witness, FixedAnnulusIsOneDegeneratePoint)
{
    nielsen::NielsenClass c;
    c.provenance = nielsen::Provenance::FixedAnnulus;
    EXPECT_EQ(class_witness(c, false), (std::vector<WitnessPoint>{{Kind::Degenerate, 0, 0}}));
}

TEST(Report, Flags)
{
    auto const r = analyze(pants_facing_rotated_pa(1));
    EXPECT_TRUE(r.flagged("pa_abutment_without_iiid"));

    auto d = fixtures::load("pa_pocket_merge.json");
    d.annuli[1].sign = desc::Sign::Minus;
    auto const mixed = analyze(d);
    EXPECT_TRUE(mixed.flagged("iiid_with_mixed_rotation"));
    EXPECT_EQ(mixed.cross_check, "ok");

    auto const ok = analyze(fixtures::pants_pocket());
    EXPECT_TRUE(ok.flags.empty());
    EXPECT_EQ(ok.cross_check, "ok");
}

TEST(Report, ProngMergeMatchesOracle)
{
    auto const r = analyze(fixtures::load("pa_pocket_merge.json"));
    EXPECT_EQ(r.A, 0);
    EXPECT_EQ(r.B, 4);
    EXPECT_EQ(r.floer_total, r.theorem1);
    EXPECT_EQ(r.cross_check, "ok");
}

TEST(BoundsProperty, OrderingHoldsWithoutFixedAnnuli)
{
    corpus::CorpusConfig cfg;
    cfg.max_components = 2;
    std::size_t reversed = 0, checked = 0;
    corpus::for_each_instance(cfg, [&](std::string const& name, desc::Description const& d) {
        auto const r = analyze(d);
        ++checked;
        ASSERT_EQ(r.theorem1 - r.reidemeister, 2 * r.A) << name;
        if (r.B == 0)
            ASSERT_LE(r.theorem2, r.theorem1) << name;
        reversed += r.theorem2 > r.theorem1;
    });
    EXPECT_GT(checked, 1000u);
    EXPECT_GT(reversed, 0u); // fixed annuli can push the degenerate count above the nondegenerate one
}

TEST(BoundsProperty, EveryInstanceInvariantOnSmallCorpus)
{
    corpus::CorpusConfig cfg;
    cfg.max_components = 2;
    auto const s = selfcheck::sweep(cfg);
    EXPECT_EQ(s.violations, 0u) << (s.first_violations.empty() ? "" : s.first_violations.front());
    EXPECT_GE(s.plain_branch, 10u);
    EXPECT_GE(s.plus_two_branch, 10u);
}

TEST(BoundsProperty, GenusZeroCorpusStillHasPockets)
{
    corpus::CorpusConfig cfg;
    cfg.max_components = 3;
    cfg.max_genus = 0;
    auto const s = selfcheck::sweep(cfg);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_GT(s.plus_two_branch, 0u);
}
