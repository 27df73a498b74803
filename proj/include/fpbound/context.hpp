#pragma once

#include "fpbound/mcdesc.hpp"
#include "fpbound/nielsen.hpp"
#include "fpbound/surfaces.hpp"

namespace fpbound {

/// Everything derived from a validated description that more than one stage needs.
struct Context
{
    desc::Description expanded;
    surfaces::SurfaceHomology homology;
    desc::RotationAssignment rotations;
    std::vector<nielsen::FixedPointRecord> records;
    std::vector<nielsen::NielsenClass> classes;
    desc::Topology topo;

    explicit Context(desc::Description const& d)
        : expanded(desc::expand_twists(d))
        , homology(surfaces::build_graph(expanded))
        , rotations(desc::rotation_signs(expanded))
        , records(nielsen::enumerate_fixed_points(expanded))
        , classes(nielsen::group_nielsen_classes(records, expanded))
        , topo(expanded)
    {
    }

    // topo points into `expanded`
    Context(Context const&) = delete;
    Context& operator=(Context const&) = delete;

    desc::Topology const& topology() const { return topo; }
};

} // namespace fpbound
