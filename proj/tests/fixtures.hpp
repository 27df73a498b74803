#pragma once

#include <string>

#include "fpbound/json_io.hpp"
#include "fpbound/mcdesc.hpp"

namespace fixtures {

inline std::string data_path(std::string const& name) { return std::string(FPBOUND_DATA_DIR) + "/" + name; }

inline fpbound::desc::Description load(std::string const& name)
{
    return fpbound::io::load_description(data_path(name));
}

inline fpbound::desc::Description parse(std::string const& text) { return fpbound::io::parse_description(text); }

inline fpbound::desc::Description pants_pocket() { return load("pants_pocket.json"); }
inline fpbound::desc::Description double_twist() { return load("double_twist.json"); }
inline fpbound::desc::Description genus2_pa() { return load("genus2_pa.json"); }

/// Pants glued to two one-holed tori, with the twist signs and free
/// rotation chosen by the caller.
inline fpbound::desc::Description pants_with_signs(char const* s1, char const* s2, char const* rot)
{
    return parse(std::string(R"({
      "components": [
        {"id": "P", "genus": 0, "boundary": ["p1", "p2", "p3"], "behavior": {"type": "identity"}},
        {"id": "T1", "genus": 1, "boundary": ["t1"], "behavior": {"type": "identity"}},
        {"id": "T2", "genus": 1, "boundary": ["t2"], "behavior": {"type": "identity"}}
      ],
      "annuli": [
        {"id": "A1", "ends": ["p1", "t1"], "sign": ")") + s1 + R"("},
        {"id": "A2", "ends": ["p2", "t2"], "sign": ")" + s2 + R"("}
      ],
      "surface_boundary": [{"circle": "p3", "rotation": ")" + rot + R"("}]
    })");
}

inline fpbound::desc::Description closed_genus2_identity()
{
    return parse(R"({"components": [{"id": "S", "genus": 2, "boundary": [], "behavior": {"type": "identity"}}]})");
}

inline fpbound::desc::Description one_holed_torus()
{
    return parse(R"({
      "components": [{"id": "T", "genus": 1, "boundary": ["t"], "behavior": {"type": "identity"}}],
      "surface_boundary": [{"circle": "t", "rotation": "+1"}]
    })");
}

inline fpbound::desc::Description pants_alone()
{
    return parse(R"({
      "components": [{"id": "P", "genus": 0, "boundary": ["c1", "c2", "c3"], "behavior": {"type": "identity"}}],
      "surface_boundary": [
        {"circle": "c1", "rotation": "+1"}, {"circle": "c2", "rotation": "+1"}, {"circle": "c3", "rotation": "+1"}
      ]
    })");
}

/// Two one-holed pA tori glued along their boundaries, unrotated with p and q prongs.
inline fpbound::desc::Description pa_pair(int p, int q)
{
    auto side = [](char const* id, char const* circle, int prongs) {
        return std::string(R"({"id": ")") + id + R"(", "genus": 1, "boundary": [")" + circle +
               R"("], "behavior": {"type": "pseudo_anosov", "singularities": [], "smooth_fixed_points": [],
               "boundary": {")" + circle + R"(": {"prongs": )" + std::to_string(prongs) + "}}}}";
    };
    return parse(R"({"components": [)" + side("L", "l", p) + "," + side("R", "r", q) +
                 R"(], "annuli": [{"id": "C", "ends": ["l", "r"], "sign": "+1"}]})");
}

/// One pA component of genus 2 with the given singularity list (JSON array text).
inline fpbound::desc::Description closed_pa(std::string const& singularities, std::string const& smooth = "[]")
{
    return parse(R"({"components": [{"id": "S", "genus": 2, "boundary": [], "behavior": {"type": "pseudo_anosov",
                 "singularities": )" +
                 singularities + R"(, "smooth_fixed_points": )" + smooth + "}}]}");
}

} // namespace fixtures
