#pragma once
/*
 *  JSON form of descriptions and reports.
 *
 *  Input:
 *    {
 *      "components": [ { "id", "genus", "boundary": [circle ids],
 *                        "return_time"?, "euler_characteristic"?, "fixed_annulus"?,
 *                        "behavior": { "type": "identity" | "periodic" | "pseudo_anosov",
 *                                      "fixed_points"?: [label | {"label"}],
 *                                      "singularities"?: [{"prongs", "rotated"?}],
 *                                      "smooth_fixed_points"?: [{"index"} | index],
 *                                      "boundary"?: { circle: {"prongs", "rotated"?}
 *                                                          | {"rotated_puncture": true} } } } ],
 *      "annuli"?: [ { "id", "ends": [a, b], "kind"?: "twist" | "flip_twist",
 *                     "sign": "+1" | "-1" | "+" | "-", "multiplicity"? } ],
 *      "surface_boundary"?: [ { "circle", "rotation": sign, "extra_twists"? } ]
 *    }
 *
 *  Reports are emitted with sorted keys and integer values only, so parsing
 *  and re-emitting is byte-identical.
 */

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fpbound/bounds.hpp"
#include "fpbound/mcdesc.hpp"

namespace fpbound::io {

using nlohmann::json;

/// Malformed document (bad JSON, wrong types, missing keys).
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline json const& field(json const& obj, char const* key, std::string const& where)
{
    if (!obj.is_object())
        throw ParseError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + ": missing \"" + key + "\"");
    return *it;
}

inline std::string get_string(json const& v, std::string const& where)
{
    if (!v.is_string())
        throw ParseError(where + ": expected a string");
    return v.get<std::string>();
}

inline int get_int(json const& v, std::string const& where)
{
    if (!v.is_number_integer())
        throw ParseError(where + ": expected an integer");
    auto const x = v.get<std::int64_t>();
    if (x < -1000000 || x > 1000000)
        throw ParseError(where + ": integer out of range");
    return static_cast<int>(x);
}

inline bool get_bool(json const& v, std::string const& where)
{
    if (!v.is_boolean())
        throw ParseError(where + ": expected true or false");
    return v.get<bool>();
}

inline json const& get_array(json const& v, std::string const& where)
{
    if (!v.is_array())
        throw ParseError(where + ": expected an array");
    return v;
}

template <class F>
void optional_field(json const& obj, char const* key, F&& f)
{
    if (auto it = obj.find(key); it != obj.end() && !it->is_null())
        f(*it);
}

} // namespace detail

inline desc::Sign parse_sign(json const& v, std::string const& where)
{
    if (v.is_number_integer()) {
        auto x = v.get<std::int64_t>();
        if (x == 1)
            return desc::Sign::Plus;
        if (x == -1)
            return desc::Sign::Minus;
    } else if (v.is_string()) {
        auto const s = v.get<std::string>();
        if (s == "+1" || s == "+")
            return desc::Sign::Plus;
        if (s == "-1" || s == "-" || s == "−" || s == "−1")
            return desc::Sign::Minus;
    }
    throw ParseError(where + ": expected a sign (\"+1\" or \"-1\")");
}

inline std::string sign_token(desc::Sign s) { return s == desc::Sign::Plus ? "+1" : "-1"; }

inline desc::Behavior parse_behavior(json const& b, std::string const& where)
{
    using namespace detail;
    auto const type = get_string(field(b, "type", where), where + ".type");
    if (type == "identity")
        return desc::Identity{};
    if (type == "periodic") {
        desc::Periodic p;
        optional_field(b, "fixed_points", [&](json const& v) {
            for (auto const& fp : get_array(v, where + ".fixed_points")) {
                if (fp.is_string())
                    p.fixed_points.push_back({fp.get<std::string>()});
                else if (fp.is_object()) {
                    desc::PeriodicPoint pt;
                    optional_field(fp, "label", [&](json const& l) { pt.label = get_string(l, where + ".label"); });
                    p.fixed_points.push_back(pt);
                } else
                    throw ParseError(where + ".fixed_points: expected labels or objects");
            }
        });
        return p;
    }
    if (type == "pseudo_anosov") {
        desc::PseudoAnosov pa;
        optional_field(b, "singularities", [&](json const& v) {
            for (auto const& s : get_array(v, where + ".singularities")) {
                desc::Singularity sg;
                sg.prongs = get_int(field(s, "prongs", where + ".singularities"), where + ".prongs");
                optional_field(s, "rotated", [&](json const& r) { sg.rotated = get_bool(r, where + ".rotated"); });
                pa.singularities.push_back(sg);
            }
        });
        optional_field(b, "smooth_fixed_points", [&](json const& v) {
            for (auto const& s : get_array(v, where + ".smooth_fixed_points")) {
                desc::SmoothFixedPoint p;
                p.index = s.is_object() ? get_int(field(s, "index", where), where + ".index")
                                        : get_int(s, where + ".smooth_fixed_points");
                pa.smooth_fixed_points.push_back(p);
            }
        });
        optional_field(b, "boundary", [&](json const& v) {
            if (!v.is_object())
                throw ParseError(where + ".boundary: expected an object keyed by circle id");
            for (auto const& [circle, spec] : v.items()) {
                std::string const w = where + ".boundary." + circle;
                desc::PaBoundary pb;
                if (!spec.is_object())
                    throw ParseError(w + ": expected an object");
                optional_field(spec, "rotated_puncture",
                               [&](json const& r) { pb.rotated_puncture = get_bool(r, w + ".rotated_puncture"); });
                if (!pb.rotated_puncture)
                    pb.prongs = get_int(field(spec, "prongs", w), w + ".prongs");
                optional_field(spec, "rotated", [&](json const& r) { pb.rotated = get_bool(r, w + ".rotated"); });
                pa.boundary[circle] = pb;
            }
        });
        return pa;
    }
    throw ParseError(where + ".type: unknown behaviour \"" + type + "\"");
}

inline desc::Description parse_description(json const& j)
{
    using namespace detail;
    if (!j.is_object())
        throw ParseError("document: expected an object");
    desc::Description d;
    auto const& comps = get_array(field(j, "components", "document"), "components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string const where = "components[" + std::to_string(i) + "]";
        auto const& c = comps[i];
        desc::Component comp;
        comp.id = get_string(field(c, "id", where), where + ".id");
        comp.genus = get_int(field(c, "genus", where), where + ".genus");
        for (auto const& circle : get_array(field(c, "boundary", where), where + ".boundary"))
            comp.boundary.push_back(get_string(circle, where + ".boundary"));
        optional_field(c, "return_time", [&](json const& v) { comp.return_time = get_int(v, where + ".return_time"); });
        optional_field(c, "euler_characteristic",
                       [&](json const& v) { comp.declared_chi = get_int(v, where + ".euler_characteristic"); });
        optional_field(c, "fixed_annulus",
                       [&](json const& v) { comp.fixed_annulus = get_bool(v, where + ".fixed_annulus"); });
        comp.behavior = parse_behavior(field(c, "behavior", where), where + ".behavior");
        d.components.push_back(std::move(comp));
    }
    optional_field(j, "annuli", [&](json const& arr) {
        get_array(arr, "annuli");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string const where = "annuli[" + std::to_string(i) + "]";
            auto const& a = arr[i];
            desc::Annulus an;
            an.id = get_string(field(a, "id", where), where + ".id");
            auto const& ends = get_array(field(a, "ends", where), where + ".ends");
            if (ends.size() != 2)
                throw ParseError(where + ".ends: expected exactly two circle ids");
            an.left = get_string(ends[0], where + ".ends");
            an.right = get_string(ends[1], where + ".ends");
            optional_field(a, "kind", [&](json const& k) {
                auto const kind = get_string(k, where + ".kind");
                if (kind == "twist")
                    an.kind = desc::AnnulusKind::Twist;
                else if (kind == "flip_twist")
                    an.kind = desc::AnnulusKind::FlipTwist;
                else
                    throw ParseError(where + ".kind: expected \"twist\" or \"flip_twist\"");
            });
            an.sign = parse_sign(field(a, "sign", where), where + ".sign");
            optional_field(a, "multiplicity", [&](json const& v) { an.multiplicity = get_int(v, where + ".multiplicity"); });
            d.annuli.push_back(an);
        }
    });
    optional_field(j, "surface_boundary", [&](json const& arr) {
        get_array(arr, "surface_boundary");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string const where = "surface_boundary[" + std::to_string(i) + "]";
            auto const& s = arr[i];
            desc::SurfaceBoundary sb;
            sb.circle = get_string(field(s, "circle", where), where + ".circle");
            sb.rotation = parse_sign(field(s, "rotation", where), where + ".rotation");
            optional_field(s, "extra_twists", [&](json const& v) { sb.extra_twists = get_int(v, where + ".extra_twists"); });
            d.surface_boundary.push_back(sb);
        }
    });
    return d;
}

inline desc::Description parse_description(std::string const& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_description(j);
}

inline std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline desc::Description load_description(std::string const& path) { return parse_description(read_file(path)); }

inline json to_json(desc::Description const& d)
{
    json comps = json::array();
    for (auto const& c : d.components) {
        json b;
        if (c.is_identity()) {
            b["type"] = "identity";
        } else if (auto const* p = std::get_if<desc::Periodic>(&c.behavior)) {
            b["type"] = "periodic";
            b["fixed_points"] = json::array();
            for (auto const& fp : p->fixed_points)
                b["fixed_points"].push_back(fp.label);
        } else {
            auto const& pa = *c.pseudo_anosov();
            b["type"] = "pseudo_anosov";
            b["singularities"] = json::array();
            for (auto const& s : pa.singularities)
                b["singularities"].push_back({{"prongs", s.prongs}, {"rotated", s.rotated}});
            b["smooth_fixed_points"] = json::array();
            for (auto const& s : pa.smooth_fixed_points)
                b["smooth_fixed_points"].push_back({{"index", s.index}});
            b["boundary"] = json::object();
            for (auto const& [circle, pb] : pa.boundary)
                b["boundary"][circle] = pb.rotated_puncture ? json{{"rotated_puncture", true}}
                                                            : json{{"prongs", pb.prongs}, {"rotated", pb.rotated}};
        }
        json jc{{"id", c.id}, {"genus", c.genus}, {"boundary", c.boundary}, {"behavior", b}};
        if (c.return_time != 1)
            jc["return_time"] = c.return_time;
        if (c.declared_chi)
            jc["euler_characteristic"] = *c.declared_chi;
        if (c.fixed_annulus)
            jc["fixed_annulus"] = true;
        comps.push_back(jc);
    }
    json annuli = json::array();
    for (auto const& a : d.annuli) {
        json ja{{"id", a.id},
                {"ends", {a.left, a.right}},
                {"kind", a.kind == desc::AnnulusKind::Twist ? "twist" : "flip_twist"},
                {"sign", sign_token(a.sign)}};
        if (a.multiplicity != 1)
            ja["multiplicity"] = a.multiplicity;
        annuli.push_back(ja);
    }
    json sb = json::array();
    for (auto const& s : d.surface_boundary) {
        json js{{"circle", s.circle}, {"rotation", sign_token(s.rotation)}};
        if (s.extra_twists != 0)
            js["extra_twists"] = s.extra_twists;
        sb.push_back(js);
    }
    return {{"components", comps}, {"annuli", annuli}, {"surface_boundary", sb}};
}

inline json to_json(bounds::BoundsReport const& r)
{
    json classes = json::array();
    for (auto const& c : r.classes) {
        json w = json::array();
        for (auto const& p : c.witness)
            w.push_back({{"kind", bounds::to_string(p.kind)}, {"prongs", p.prongs}, {"index", p.index}});
        classes.push_back({{"id", c.id},
                           {"index", c.index},
                           {"provenance", c.provenance},
                           {"host", c.host},
                           {"nondegenerate", c.nondegenerate},
                           {"degenerate", c.degenerate},
                           {"floer_rank", c.floer_rank},
                           {"flags", c.flags},
                           {"witness", w}});
    }
    return {{"classification", bounds::to_string(r.classification)},
            {"classes", classes},
            {"A", r.A},
            {"A_components", r.A_components},
            {"B", r.B},
            {"reidemeister", r.reidemeister},
            {"essential", r.essential},
            {"theorem1", r.theorem1},
            {"theorem2", r.theorem2},
            {"floer_total", r.floer_total},
            {"cross_check", r.cross_check},
            {"flags", r.flags}};
}

inline std::string render_json(bounds::BoundsReport const& r) { return to_json(r).dump(2) + "\n"; }

inline bounds::BoundsReport report_from_json(json const& j)
{
    using namespace detail;
    bounds::BoundsReport r;
    auto const cls = get_string(field(j, "classification", "report"), "classification");
    if (cls == "periodic")
        r.classification = bounds::Classification::Periodic;
    else if (cls == "pseudo_anosov")
        r.classification = bounds::Classification::PseudoAnosov;
    else if (cls == "reducible")
        r.classification = bounds::Classification::Reducible;
    else
        throw ParseError("report: unknown classification \"" + cls + "\"");
    for (auto const& c : get_array(field(j, "classes", "report"), "classes")) {
        bounds::ClassReport cr;
        cr.id = get_string(field(c, "id", "class"), "class.id");
        cr.index = get_int(field(c, "index", "class"), "class.index");
        cr.provenance = get_string(field(c, "provenance", "class"), "class.provenance");
        cr.host = get_string(field(c, "host", "class"), "class.host");
        cr.nondegenerate = get_int(field(c, "nondegenerate", "class"), "class.nondegenerate");
        cr.degenerate = get_int(field(c, "degenerate", "class"), "class.degenerate");
        cr.floer_rank = get_int(field(c, "floer_rank", "class"), "class.floer_rank");
        for (auto const& f : get_array(field(c, "flags", "class"), "class.flags"))
            cr.flags.push_back(get_string(f, "class.flags"));
        for (auto const& p : get_array(field(c, "witness", "class"), "class.witness")) {
            bounds::WitnessPoint wp;
            auto const kind = get_string(field(p, "kind", "witness"), "witness.kind");
            if (kind == "nondegenerate")
                wp.kind = bounds::WitnessPoint::Kind::Nondegenerate;
            else if (kind == "monkey_saddle")
                wp.kind = bounds::WitnessPoint::Kind::MonkeySaddle;
            else if (kind == "degenerate")
                wp.kind = bounds::WitnessPoint::Kind::Degenerate;
            else
                throw ParseError("witness: unknown kind \"" + kind + "\"");
            wp.prongs = get_int(field(p, "prongs", "witness"), "witness.prongs");
            wp.index = get_int(field(p, "index", "witness"), "witness.index");
            cr.witness.push_back(wp);
        }
        r.classes.push_back(std::move(cr));
    }
    r.A = get_int(field(j, "A", "report"), "A");
    for (auto const& s : get_array(field(j, "A_components", "report"), "A_components"))
        r.A_components.push_back(get_string(s, "A_components"));
    r.B = get_int(field(j, "B", "report"), "B");
    r.reidemeister = get_int(field(j, "reidemeister", "report"), "reidemeister");
    r.essential = get_int(field(j, "essential", "report"), "essential");
    r.theorem1 = get_int(field(j, "theorem1", "report"), "theorem1");
    r.theorem2 = get_int(field(j, "theorem2", "report"), "theorem2");
    r.floer_total = get_int(field(j, "floer_total", "report"), "floer_total");
    r.cross_check = get_string(field(j, "cross_check", "report"), "cross_check");
    for (auto const& f : get_array(field(j, "flags", "report"), "flags"))
        r.flags.push_back(get_string(f, "flags"));
    return r;
}

inline std::string render_text(bounds::BoundsReport const& r)
{
    std::ostringstream os;
    os << "classification: " << bounds::to_string(r.classification) << "\n\n";
    os << "class    index  provenance           host           nondeg  degen  floer  witness\n";
    for (auto const& c : r.classes) {
        std::string w;
        for (auto const& p : c.witness) {
            if (!w.empty())
                w += ", ";
            if (p.kind == bounds::WitnessPoint::Kind::MonkeySaddle)
                w += "monkey_saddle(" + std::to_string(p.prongs) + ")";
            else
                w += std::string(bounds::to_string(p.kind)) + "(" + (p.index > 0 ? "+" : "") +
                     std::to_string(p.index) + ")";
        }
        char line[256];
        std::snprintf(line, sizeof line, "%-8s %5d  %-20s %-14s %6d %6d %6d  ", c.id.c_str(), c.index,
                      c.provenance.c_str(), c.host.c_str(), c.nondegenerate, c.degenerate, c.floer_rank);
        os << line << w;
        for (auto const& f : c.flags)
            os << " [" << f << "]";
        os << '\n';
    }
    os << "\nA = " << r.A;
    if (!r.A_components.empty()) {
        os << " (";
        for (std::size_t i = 0; i < r.A_components.size(); ++i)
            os << (i ? ", " : "") << r.A_components[i];
        os << ")";
    }
    os << "\nB = " << r.B << '\n';
    os << "reidemeister trace = " << r.reidemeister << '\n';
    os << "essential classes = " << r.essential << '\n';
    os << "theorem1 (nondegenerate minimum) = " << r.theorem1 << '\n';
    os << "theorem2 (minimum) = " << r.theorem2 << '\n';
    os << "floer total rank = " << r.floer_total << '\n';
    os << "cross-check: " << r.cross_check << '\n';
    for (auto const& f : r.flags)
        os << "flag: " << f << '\n';
    return os.str();
}

} // namespace fpbound::io
