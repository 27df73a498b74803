#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fpbound/mcdesc.hpp"

using namespace fpbound;
using namespace fpbound::desc;

namespace {

std::size_t count_fixed_annuli(Description const& d)
{
    std::size_t n = 0;
    for (auto const& c : d.components)
        n += c.fixed_annulus;
    return n;
}

} // namespace

TEST(Validate, WorkedExamplesAreValid)
{
    for (auto const& d : {fixtures::pants_pocket(), fixtures::double_twist(), fixtures::genus2_pa()}) {
        auto const v = validate(d);
        EXPECT_TRUE(v.ok());
        ASSERT_TRUE(v.normalized.has_value());
        EXPECT_EQ(*v.normalized, d);
    }
}

TEST(Validate, TwoProngSingularity)
{
    auto const v = validate(fixtures::load("two_prong_singularity.json"));
    EXPECT_FALSE(v.ok());
    EXPECT_TRUE(v.has("E_PRONGS"));
}

TEST(Validate, ZeroProngBoundary)
{
    auto d = fixtures::pa_pair(2, 3);
    std::get<PseudoAnosov>(d.components[0].behavior).boundary["l"].prongs = 0;
    EXPECT_TRUE(validate(d).has("E_PRONGS"));
}

TEST(Validate, DeclaredEulerCharacteristicMismatch)
{
    auto d = fixtures::pants_pocket();
    d.components[0].genus = 1;
    d.components[0].declared_chi = -1;
    EXPECT_TRUE(validate(d).has("E_CHI"));
}

TEST(Validate, NonNegativeEulerCharacteristic)
{
    auto d = fixtures::parse(R"({
      "components": [{"id": "A", "genus": 0, "boundary": ["x", "y"], "behavior": {"type": "identity"}}],
      "surface_boundary": [{"circle": "x", "rotation": "+1"}, {"circle": "y", "rotation": "+1"}]
    })");
    EXPECT_TRUE(validate(d).has("E_CHI"));
}

TEST(Validate, DanglingReference)
{
    auto d = fixtures::pants_pocket();
    d.annuli[0].right = "nowhere";
    EXPECT_TRUE(validate(d).has("E_DANGLING"));
}

TEST(Validate, UnusedCircleIsDangling)
{
    auto d = fixtures::pants_pocket();
    d.surface_boundary.clear();
    EXPECT_TRUE(validate(d).has("E_DANGLING"));
}

TEST(Validate, Disconnected)
{
    auto d = fixtures::closed_genus2_identity();
    auto other = d.components[0];
    other.id = "S2";
    d.components.push_back(other);
    EXPECT_TRUE(validate(d).has("E_DISCONNECTED"));
}

TEST(Validate, FixedAnnulusNextToProngBoundary)
{
    auto d = fixtures::load("pa_pocket_merge.json");
    ASSERT_TRUE(validate(d).ok());
    d.annuli[0].multiplicity = 2; // inserts a fixed annulus facing the 2-prong boundary
    EXPECT_TRUE(validate(d).has("E_IB_ABUT"));
}

TEST(Validate, OppositeParallelTwists)
{
    auto d = fixtures::parse(R"({
      "components": [
        {"id": "T1", "genus": 1, "boundary": ["t1"], "behavior": {"type": "identity"}},
        {"id": "F", "genus": 0, "boundary": ["f1", "f2"], "fixed_annulus": true, "behavior": {"type": "identity"}},
        {"id": "T2", "genus": 1, "boundary": ["t2"], "behavior": {"type": "identity"}}
      ],
      "annuli": [
        {"id": "C1", "ends": ["t1", "f1"], "sign": "+1"},
        {"id": "C2", "ends": ["f2", "t2"], "sign": "-1"}
      ]
    })");
    EXPECT_TRUE(validate(d).has("E_PARALLEL"));
    d.annuli[1].sign = Sign::Plus;
    EXPECT_TRUE(validate(d).ok());
}

TEST(Validate, InventoryOnNonFixedComponent)
{
    auto d = fixtures::double_twist();
    for (auto& c : d.components) {
        c.return_time = 2;
        c.behavior = Periodic{{{"q"}}};
    }
    EXPECT_TRUE(validate(d).has("E_INVENTORY"));
}

TEST(Validate, EulerPoincareWarningIsOptIn)
{
    auto const d = fixtures::genus2_pa();
    EXPECT_TRUE(validate(d).warnings.empty());
    ValidateOptions opts;
    opts.euler_poincare_warning = true;
    EXPECT_TRUE(validate(d, opts).warnings.empty());

    auto const off = fixtures::closed_pa(R"([{"prongs": 3}])");
    EXPECT_TRUE(validate(off).ok());
    EXPECT_TRUE(validate(off).warnings.empty());
    auto const warned = validate(off, opts);
    EXPECT_TRUE(warned.ok());
    ASSERT_EQ(warned.warnings.size(), 1u);
    EXPECT_EQ(warned.warnings[0].code, "W_EULER_POINCARE");
}

TEST(Expand, DoubleTwist)
{
    auto const e = expand_twists(fixtures::double_twist());
    EXPECT_EQ(e.annuli.size(), 2u);
    EXPECT_EQ(count_fixed_annuli(e), 1u);
    for (auto const& a : e.annuli)
        EXPECT_EQ(a.multiplicity, 1);
}

TEST(Expand, MultiplicityOneUnchanged)
{
    auto const d = fixtures::pants_pocket();
    EXPECT_EQ(expand_twists(d), d);
}

TEST(Expand, MultiplicityThree)
{
    auto d = fixtures::double_twist();
    d.annuli[0].multiplicity = 3;
    auto const e = expand_twists(d);
    EXPECT_EQ(e.annuli.size(), 3u);
    EXPECT_EQ(count_fixed_annuli(e), 2u);
}

TEST(Expand, BoundaryExtraTwistsAddCollars)
{
    auto const e = expand_twists(fixtures::load("pa_pocket_merge.json"));
    // multiplicity 3 on A2 and two extra twists at p3
    EXPECT_EQ(count_fixed_annuli(e), 4u);
    ASSERT_EQ(e.surface_boundary.size(), 1u);
    EXPECT_EQ(e.surface_boundary[0].extra_twists, 0);
    EXPECT_NE(e.surface_boundary[0].circle, "p3");
}

TEST(Expand, IdempotentRevalidatesAndKeepsChi)
{
    for (auto const& d : {fixtures::pants_pocket(), fixtures::double_twist(), fixtures::genus2_pa(),
                          fixtures::load("pa_pocket_merge.json")}) {
        auto const e = expand_twists(d);
        EXPECT_EQ(expand_twists(e), e);
        EXPECT_TRUE(validate(e).ok());
        EXPECT_EQ(e.euler_characteristic(), d.euler_characteristic());
    }
}

TEST(Rotation, UniformPocket)
{
    auto const r = rotation_signs(expand_twists(fixtures::pants_pocket()));
    for (auto const* c : {"p1", "p2", "p3"})
        EXPECT_EQ(r.at(c), Sign::Plus);
}

TEST(Rotation, MixedAfterOneSignFlip)
{
    auto const r = rotation_signs(expand_twists(fixtures::pants_with_signs("+1", "-1", "+1")));
    EXPECT_EQ(r.at("p1"), Sign::Plus);
    EXPECT_EQ(r.at("p2"), Sign::Minus);
    EXPECT_EQ(r.at("p3"), Sign::Plus);
}

TEST(Rotation, BothEndsOfATwistShareItsSign)
{
    auto const r = rotation_signs(expand_twists(fixtures::pants_with_signs("-1", "+1", "+1")));
    EXPECT_EQ(r.at("p1"), Sign::Minus);
    EXPECT_EQ(r.at("t1"), Sign::Minus);
}

TEST(Rotation, ClosedComponentHasNoEnds)
{
    EXPECT_TRUE(rotation_signs(expand_twists(fixtures::closed_genus2_identity())).empty());
}
