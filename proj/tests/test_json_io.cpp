#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "fpbound/bounds.hpp"
#include "fpbound/json_io.hpp"

using namespace fpbound;
using namespace fpbound::io;

namespace {

int text_field(std::string const& text, std::string const& label)
{
    std::regex const re(label + " = (-?[0-9]+)");
    std::smatch m;
    if (!std::regex_search(text, m, re))
        throw std::runtime_error("missing " + label);
    return std::stoi(m[1]);
}

} // namespace

TEST(Parse, PocketFile)
{
    auto const d = fixtures::pants_pocket();
    ASSERT_EQ(d.components.size(), 3u);
    EXPECT_EQ(d.components[0].boundary, (std::vector<std::string>{"p1", "p2", "p3"}));
    ASSERT_EQ(d.annuli.size(), 2u);
    EXPECT_EQ(d.annuli[1].left, "p2");
    EXPECT_EQ(d.annuli[1].right, "t2");
    ASSERT_EQ(d.surface_boundary.size(), 1u);
    EXPECT_EQ(d.surface_boundary[0].rotation, desc::Sign::Plus);
}

TEST(Parse, SignTokens)
{
    for (auto const* s : {R"("+1")", R"("+")", "1"})
        EXPECT_EQ(parse_sign(json::parse(s), "x"), desc::Sign::Plus);
    for (auto const* s : {R"("-1")", R"("-")", R"("−")", "-1"})
        EXPECT_EQ(parse_sign(json::parse(s), "x"), desc::Sign::Minus);
    EXPECT_THROW(parse_sign(json::parse("2"), "x"), ParseError);
    EXPECT_THROW(parse_sign(json::parse(R"("up")"), "x"), ParseError);
}

TEST(Parse, Errors)
{
    EXPECT_THROW(load_description(fixtures::data_path("malformed.json")), ParseError);
    EXPECT_THROW(load_description(fixtures::data_path("does_not_exist.json")), ParseError);
    EXPECT_THROW(parse_description(std::string("[]")), ParseError);
    EXPECT_THROW(parse_description(std::string(R"({"components": [{"id": "S"}]})")), ParseError);
    EXPECT_THROW(parse_description(std::string(
                     R"({"components": [{"id": "S", "genus": 2, "boundary": [], "behavior": {"type": "spinning"}}]})")),
                 ParseError);
}

TEST(Parse, DescriptionRoundTrip)
{
    for (auto const* name : {"pants_pocket.json", "double_twist.json", "genus2_pa.json", "pa_pocket_merge.json",
                             "self_glued_torus.json"}) {
        auto const d = fixtures::load(name);
        EXPECT_EQ(parse_description(to_json(d)), d) << name;
    }
}

TEST(Report, JsonRoundTripIsByteIdentical)
{
    for (auto const* name : {"pants_pocket.json", "double_twist.json", "genus2_pa.json", "pa_pocket_merge.json"}) {
        auto const first = render_json(bounds::analyze(fixtures::load(name)));
        auto const second = render_json(report_from_json(json::parse(first)));
        EXPECT_EQ(first, second) << name;
        EXPECT_EQ(first.find('.'), std::string::npos) << "no floating point in " << name;
    }
}

TEST(Report, KeysAreSorted)
{
    auto const j = json::parse(render_json(bounds::analyze(fixtures::pants_pocket())));
    std::string prev;
    for (auto const& [k, v] : j.items()) {
        EXPECT_LT(prev, k);
        prev = k;
    }
}

TEST(Report, TextAndJsonAgree)
{
    for (auto const* name : {"pants_pocket.json", "double_twist.json", "genus2_pa.json", "pa_pocket_merge.json"}) {
        auto const r = bounds::analyze(fixtures::load(name));
        auto const j = json::parse(render_json(r));
        auto const text = render_text(r);
        EXPECT_EQ(text_field(text, "A"), j["A"].get<int>());
        EXPECT_EQ(text_field(text, "B"), j["B"].get<int>());
        EXPECT_EQ(text_field(text, "reidemeister trace"), j["reidemeister"].get<int>());
        EXPECT_EQ(text_field(text, "essential classes"), j["essential"].get<int>());
        EXPECT_EQ(text_field(text, "theorem1 \\(nondegenerate minimum\\)"), j["theorem1"].get<int>());
        EXPECT_EQ(text_field(text, "theorem2 \\(minimum\\)"), j["theorem2"].get<int>());
        EXPECT_EQ(text_field(text, "floer total rank"), j["floer_total"].get<int>());

        // per-class rows: id index provenance host nondeg degen floer
        std::istringstream rows(text);
        std::string line;
        std::size_t seen = 0;
        while (std::getline(rows, line)) {
            std::istringstream row(line);
            std::string id, prov, host;
            int index = 0, nondeg = 0, degen = 0, floer = 0;
            if (!(row >> id >> index >> prov >> host >> nondeg >> degen >> floer))
                continue;
            for (auto const& c : j["classes"])
                if (c["id"] == id) {
                    ++seen;
                    EXPECT_EQ(index, c["index"].get<int>());
                    EXPECT_EQ(nondeg, c["nondegenerate"].get<int>());
                    EXPECT_EQ(degen, c["degenerate"].get<int>());
                    EXPECT_EQ(floer, c["floer_rank"].get<int>());
                }
        }
        EXPECT_EQ(seen, j["classes"].size()) << name;
    }
}
