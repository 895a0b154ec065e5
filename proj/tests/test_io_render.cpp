#include "doctest.h"

#include <stdexcept>
#include "schur/json_io.hpp"
#include "schur/svg.hpp"

using namespace schur;
using io::json;

TEST_SUITE("cli_render") {
TEST_CASE("process samples round-trip through JSON") {
    RandomSource src(51);
    Word w = parse_word("<'<>'<>>");
    std::vector<double> z{0.5, 0.25, 0.75, 0.5, 0.5, 0.125};
    auto s = schur_sample(w, z, src);
    json j = io::to_json(s);
    CHECK(io::format_of(j) == io::process_sample_format);
    auto back = io::process_sample_from_json(json::parse(j.dump()));
    CHECK(back.word == s.word);
    CHECK(back.z == s.z);
    CHECK(back.seed == s.seed);
    CHECK(back.lambdas == s.lambdas);
}

TEST_CASE("views round-trip") {
    RandomSource src(52);
    auto sym = symmetric_schur_sample(parse_word("<<'<<'"), std::vector<double>(4, 0.5), 0.9, BoundaryMode::free, src);
    auto sback = io::symmetric_sample_from_json(io::to_json(sym));
    CHECK(sback.lambdas == sym.lambdas);
    CHECK(sback.mode == sym.mode);
    CHECK(sback.t == sym.t);

    auto o = to_plane_overpartition(sym);
    auto oback = io::overpartition_from_json(io::to_json(o));
    CHECK(oback.doubled == o.doubled);

    auto az = schur_sample(parse_word("(<'>)^4"), std::vector<double>(8, 1.0), src);
    auto t = to_steep_tiling(az);
    auto tback = io::steep_tiling_from_json(io::to_json(t));
    CHECK(tback.dominoes == t.dominoes);
    CHECK(from_steep_tiling(tback) == az.lambdas);

    auto pp = schur_sample(parse_word("<<>><>"), std::vector<double>(6, 0.6), src);
    auto h = to_plane_partition(pp);
    CHECK(io::plane_partition_from_json(io::to_json(h)).rows == h.rows);

    auto pyr = unbounded_schur_sample(ParameterSequences::q_volume(0.5), WordConvention::alternating(), src);
    auto pback = io::pyramidal_sample_from_json(io::to_json(pyr, "alternating"));
    CHECK(pback.lambdas == pyr.lambdas);
    CHECK(pback.min_index == pyr.min_index);

    CHECK(io::partition_from_json(io::to_json(Partition{3, 1})) == Partition{3, 1});
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(io::process_sample_from_json(json::parse(R"({"format":"other"})")), std::invalid_argument);
    CHECK_THROWS_AS(io::process_sample_from_json(json::parse(
                        R"({"format":"schur/process-sample/1","word":"<>","z":[0.5,0.5],"seed":0,"lambdas":[[],[1,1],[]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::partition_from_json(json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(io::process_sample_from_json(json::parse("[]")), std::invalid_argument);
}

TEST_CASE("svg output") {
    RenderStyle style;
    auto empty = to_steep_tiling(std::vector<Partition>(5), parse_word("(<'>)^2"));
    empty.dominoes.clear();
    std::string outline = render_svg(empty, style);
    CHECK(outline.find("<svg") != std::string::npos);
    CHECK(outline.find("<rect") == std::string::npos);
    CHECK(outline.find("<path") != std::string::npos);

    RandomSource a(53), b(53);
    auto ta = to_steep_tiling(schur_sample(parse_word("(<'>)^4"), std::vector<double>(8, 1.0), a));
    auto tb = to_steep_tiling(schur_sample(parse_word("(<'>)^4"), std::vector<double>(8, 1.0), b));
    std::string sa = render_svg(ta, style);
    CHECK(sa == render_svg(tb, style));
    CHECK(sa.find("</svg>") != std::string::npos);

    style.model = RenderModel::lozenge;
    auto h = to_plane_partition(std::vector<Partition>{{}, {1}, {3, 1}, {4, 2}, {2, 2}, {2}, {3, 2}, {4, 2}, {2}, {}},
                                parse_word("<<<>><<>>"));
    CHECK(render_svg(h, style).find("<polygon") != std::string::npos);
    style.model = RenderModel::maya_particles;
    CHECK(render_maya_svg({Partition{}, Partition{2, 1}, Partition{}}, style).find("<circle") != std::string::npos);

    style.scale = 0;
    CHECK_THROWS_AS(render_svg(h, style), std::invalid_argument);
    CHECK(parse_render_model("maya-particles") == RenderModel::maya_particles);
    CHECK_THROWS_AS(parse_render_model("voxel"), std::invalid_argument);
}
}
