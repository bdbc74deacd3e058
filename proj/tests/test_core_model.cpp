#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "vfcomb/bracketing.hpp"
#include "vfcomb/core_model.hpp"

using namespace vfcomb;
using Kind = Violation::Kind;

namespace {

// d=5 sample: homoclinics 0-3 and 6-7, one alpha-omega zone with
// transversal 4-5, sepal ends 1 and 2.
SeparatrixData sample_separatrix() { return {5, {{0, 3}, {6, 7}, {1, 2}, {4}, {5}}, {0, 3, 6, 7}}; }
TransversalData sample_transversal() { return {5, {3, 1, 2, 0, 5, 4, 7, 6}, {0, 3, 6, 7}, {4, 5}}; }

}  // namespace

TEST_CASE("validate_separatrix examples") {
    CHECK(validate_separatrix({2, {{0}, {1}}, {}}).ok());

    auto parity = validate_separatrix({3, {{0, 2}, {1}, {3}}, {0, 2}});
    CHECK(parity.has(Kind::Parity));

    auto crossing = validate_separatrix({4, {{0, 3}, {2, 5}, {1}, {4}}, {0, 3, 2, 5}});
    CHECK(crossing.has(Kind::Crossing));

    auto range = validate_separatrix({2, {{0, 2}}, {}});
    CHECK(range.has(Kind::Domain));
    CHECK(range.has(Kind::Partition));

    CHECK(validate_separatrix({3, {{0, 1, 2, 3}}, {0, 1}}).has(Kind::HomoclinicPair));
    CHECK(validate_separatrix({1, {}, {}}).ok());
}

TEST_CASE("validation reports every violation") {
    // Same-parity H pair and a crossing at once.
    auto report = validate_separatrix({4, {{0, 2}, {1, 4}, {3}, {5}}, {0, 2}});
    CHECK(report.has(Kind::Parity));
    CHECK(report.has(Kind::Crossing));
    for (const auto& v : report.violations) CHECK_FALSE(v.message.empty());
}

TEST_CASE("validate_transversal examples") {
    CHECK(validate_transversal(sample_transversal()).ok());
    CHECK(validate_transversal({2, {1, 0}, {0}, {1}}).has(Kind::MarkedSets));
    CHECK(validate_transversal({4, {3, 1, 5, 0, 4, 2}, {}, {0, 3, 2, 5}}).has(Kind::Crossing));
    CHECK(validate_transversal({3, {1, 2, 0, 3}, {}, {}}).has(Kind::NotInvolution));
    CHECK(validate_transversal({3, {2, 1, 0, 3}, {}, {0, 2}}).has(Kind::Parity));
    CHECK(validate_transversal({2, {0, 1}, {0}, {}}).has(Kind::MarkedSets));
}

TEST_CASE("to_transversal examples") {
    CHECK(to_transversal(sample_separatrix()) == sample_transversal());

    // Two separate landing points bound one alpha-omega cell.
    CHECK(to_transversal({2, {{0}, {1}}, {}}) == TransversalData{2, {1, 0}, {}, {0, 1}});
    CHECK(to_transversal({2, {{0, 1}}, {}}) == TransversalData{2, {0, 1}, {}, {}});
    CHECK(to_transversal({2, {{0, 1}}, {0, 1}}) == TransversalData{2, {1, 0}, {0, 1}, {}});
}

TEST_CASE("to_separatrix examples") {
    CHECK(to_separatrix(sample_transversal()) == sample_separatrix());
    CHECK(to_separatrix({2, {0, 1}, {}, {}}) == SeparatrixData{2, {{0, 1}}, {}});
    CHECK(to_separatrix({2, {1, 0}, {0, 1}, {}}) == SeparatrixData{2, {{0, 1}}, {0, 1}});
    CHECK(to_separatrix({1, {}, {}, {}}) == SeparatrixData{1, {}, {}});
}

TEST_CASE("classify_cells examples") {
    const auto sample = classify_cells(sample_separatrix());
    CHECK(sample.sepal_total() == 2);
    CHECK(sample.alpha_omega == 1);
    CHECK(sample.center_total() == 1);

    CHECK(classify_cells({2, {{0, 1}}, {0, 1}}) == CellReport{0, 0, 0, 1, 1});
    CHECK(classify_cells({2, {{0, 1}}, {}}) == CellReport{0, 1, 1, 0, 0});
    CHECK(classify_cells({1, {}, {}}).total() == 0);
}

TEST_CASE("inadmissible cells are rejected") {
    // Four singleton landing points around one cell: four landing steps.
    const SeparatrixData bad{3, {{0}, {1}, {2}, {3}}, {}};
    REQUIRE(validate_separatrix(bad).ok());
    bool found = false;
    for (const auto& cell : separatrix_cells(bad)) found |= cell.kind == CellKind::Unclassifiable;
    CHECK(found);
    CHECK_THROWS_AS(classify_cells(bad), std::invalid_argument);
    CHECK_THROWS_AS(to_transversal(bad), std::invalid_argument);
}

TEST_CASE("invariants_of examples") {
    const PairingConfig sample(5, {{0, 3, PairKind::Round}, {6, 7, PairKind::Round}, {4, 5, PairKind::Square}});
    CHECK(invariants_of(sample) == Dimension{2, 1, 4});
    CHECK(sample.unpaired() == std::vector<int>{1, 2});
    CHECK(invariants_of(PairingConfig(4, {})) == Dimension{0, 0, 0});
    CHECK(invariants_of(parse("[01][23][45]")) == Dimension{0, 3, 6});
}

TEST_CASE("PairingConfig rejects malformed pairs") {
    CHECK_THROWS_AS(PairingConfig(3, {{0, 2, PairKind::Round}}), std::invalid_argument);
    CHECK_THROWS_AS(PairingConfig(3, {{0, 5, PairKind::Round}}), std::invalid_argument);
    CHECK_THROWS_AS(PairingConfig(4, {{0, 3, PairKind::Round}, {2, 5, PairKind::Square}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PairingConfig(3, {{0, 1, PairKind::Round}, {1, 2, PairKind::Round}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PairingConfig(0, {}), std::invalid_argument);
    CHECK_NOTHROW(PairingConfig(1, {}));
}

TEST_CASE("round trip and cell counts over every configuration, d <= 6") {
    for (int d = 1; d <= 6; ++d) {
        CAPTURE(d);
        int failures = 0;
        enumerate(d, [&](const PairingConfig& config) {
            const auto dim = invariants_of(config);
            const auto t = to_transversal_data(config);
            const auto s = to_separatrix(t);
            if (!validate_transversal(t).ok() || !validate_separatrix(s).ok()) ++failures;
            if (to_transversal(s) != t || to_pairing(t) != config) ++failures;

            const auto cells = classify_cells(s);
            if (cells.alpha_omega != dim.s) ++failures;
            if (d >= 2 && cells.total() < 1) ++failures;

            const auto tcells = transversal_cells(t);
            if (static_cast<int>(tcells.size()) != dim.h + dim.s + 1) ++failures;
            // Centers are the transversal cells without landing indices.
            const auto empty = std::count_if(tcells.begin(), tcells.end(),
                                             [](const TransversalCell& c) { return c.landing.empty(); });
            if (d >= 2 && empty != cells.center_total()) ++failures;
            if (dim.q > 2 * (d - 1) || (dim.q == 2 * (d - 1)) != (dim.h == 0 && dim.s == d - 1)) ++failures;
            return true;
        });
        CHECK(failures == 0);
    }
}

TEST_CASE("admissible separatrix data are in bijection with configurations, d <= 6") {
    for (int d = 2; d <= 6; ++d) {
        CAPTURE(d);
        std::set<std::string> images;
        long admissible = 0;
        for (const auto& data : oracle::separatrix_candidates(d)) {
            REQUIRE(validate_separatrix(data).ok());
            const auto cells = separatrix_cells(data);
            const bool ok = std::none_of(cells.begin(), cells.end(), [](const SeparatrixCell& c) {
                return c.kind == CellKind::Unclassifiable;
            });
            if (!ok) continue;
            ++admissible;
            const auto t = to_transversal(data);
            CHECK(to_separatrix(t) == data);
            images.insert(render(to_pairing(t)));
        }
        std::set<std::string> expected;
        for (const auto& m : oracle::typed_matchings(2 * d - 2)) expected.insert(render(2 * d - 2, m));
        CHECK(admissible == static_cast<long>(expected.size()));
        CHECK(images == expected);
    }
}

TEST_CASE("degree one is the empty configuration") {
    const PairingConfig empty;
    CHECK(empty.degree() == 1);
    CHECK(empty.size() == 0);
    CHECK(to_transversal_data(empty) == TransversalData{1, {}, {}, {}});
    CHECK(separatrix_cells({1, {}, {}}).empty());
    CHECK(transversal_cells({1, {}, {}, {}}).size() == 1);
}

TEST_CASE("parity of every non-fixed orbit") {
    for (int d = 2; d <= 5; ++d) {
        enumerate(d, [&](const PairingConfig& config) {
            const auto t = to_transversal_data(config);
            for (int l = 0; l < config.size(); ++l) {
                if (t.involution[l] != l) CHECK((t.involution[l] - l) % 2 != 0);
            }
            return true;
        });
    }
}
