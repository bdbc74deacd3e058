#include <doctest.h>

#include "oracles.hpp"
#include "vfcomb/bracketing.hpp"
#include "vfcomb/render.hpp"

using namespace vfcomb;

namespace {

int chords(const std::string& svg) { return oracle::count_substring(svg, "class=\"chord"); }

}  // namespace

TEST_CASE("chord counts in the examples") {
    for (auto model : {DiskModel::Separatrix, DiskModel::Transversal}) {
        CHECK(chords(render_svg(parse("(01)"), model)) == 1);
        CHECK(chords(render_svg(parse("(0 1 2 3)[4 5](6 7)"), model)) == 3);
        CHECK(chords(render_svg(parse("012345"), model)) == 0);
        CHECK(chords(render_svg(PairingConfig(), model)) == 0);
    }
}

TEST_CASE("every SVG is well formed with h+s chords, d <= 5") {
    for (int d = 1; d <= 5; ++d) {
        enumerate(d, [&](const PairingConfig& x) {
            const auto dim = invariants_of(x);
            for (auto model : {DiskModel::Separatrix, DiskModel::Transversal}) {
                const auto svg = render_svg(x, model);
                CHECK(oracle::xml_well_formed(svg));
                CHECK(chords(svg) == dim.h + dim.s);
            }
            return true;
        });
    }
}

TEST_CASE("landing edges only in the separatrix model") {
    const auto x = parse("0(12)3");
    const auto sep = render_svg(x, DiskModel::Separatrix);
    const auto tra = render_svg(x, DiskModel::Transversal);
    // s0 and s3 share one landing point.
    CHECK(oracle::count_substring(sep, "class=\"landing\"") == 2);
    CHECK(oracle::count_substring(sep, "class=\"equilibrium\"") == 1);
    CHECK(oracle::count_substring(tra, "class=\"landing\"") == 0);
}

TEST_CASE("boundary points sit on the circle") {
    const auto svg = render_svg(parse("[01]"), DiskModel::Transversal);
    // s0 at angle 0, s1 at angle pi on a radius-160 circle centred at 200.
    CHECK(svg.find("cx=\"360.000\" cy=\"200.000\"") != std::string::npos);
    CHECK(svg.find("cx=\"40.000\" cy=\"200.000\"") != std::string::npos);
}

TEST_CASE("dot output") {
    const auto dot = render_dot(parse("(0123)[45](67)"), DiskModel::Separatrix);
    CHECK(dot.rfind("graph disk_model {", 0) == 0);
    CHECK(oracle::count_substring(dot, "class=\"chord") == 3);
    CHECK(oracle::count_substring(dot, "class=landing") == 4);
    CHECK(dot.back() == '\n');
}
