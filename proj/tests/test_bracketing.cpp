#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "vfcomb/bracketing.hpp"
#include "vfcomb/counting.hpp"

using namespace vfcomb;

namespace {

bool fails_rule(std::string_view text, int rule) {
    try {
        parse_bracketing(text);
    } catch (const BracketError& e) {
        return e.violates(rule);
    }
    return false;
}

}  // namespace

TEST_CASE("parse examples") {
    const auto config = parse("[01][2[34]5]");
    const std::vector<Pair> expected{{0, 1, PairKind::Square}, {2, 5, PairKind::Square}, {3, 4, PairKind::Square}};
    CHECK(std::vector<Pair>(config.pairs().begin(), config.pairs().end()) == expected);
    CHECK(config.degree() == 4);

    CHECK(fails_rule("((01)23)", 3));
    CHECK(fails_rule("(012)3", 4));
    CHECK(fails_rule("([)]", 5));
}

TEST_CASE("each validity rule") {
    CHECK(fails_rule("(01", 1));
    CHECK(fails_rule("01)(", 2));
    CHECK(fails_rule("0[1]]", 2));
    CHECK(fails_rule("(0(12)3))", 1));
    CHECK(fails_rule("((01))", 3));
    CHECK(fails_rule("()01", 4));
    CHECK(fails_rule("(0[12)3]", 5));
    CHECK(fails_rule("10", 0));
    CHECK(fails_rule("0x1", 0));
    CHECK(fails_rule("0 1 1", 0));
}

TEST_CASE("errors carry positions") {
    try {
        parse_bracketing("01(23");
        FAIL("expected BracketError");
    } catch (const BracketError& e) {
        REQUIRE_FALSE(e.issues().empty());
        CHECK(e.issues().front().rule == 1);
        CHECK(e.issues().front().position <= 5);
    }
}

TEST_CASE("parse rejects odd element counts as degrees") {
    CHECK_THROWS_AS(parse("012"), std::invalid_argument);
    CHECK(parse_bracketing("0(12)").length == 3);
}

TEST_CASE("render examples") {
    const PairingConfig sample(5, {{0, 3, PairKind::Round}, {6, 7, PairKind::Round}, {4, 5, PairKind::Square}});
    CHECK(render(sample) == "(0123)[45](67)");
    CHECK(parse("(0 1 2 3)[4 5](6 7)") == sample);
    CHECK(render(PairingConfig()) == "");
    CHECK(render(PairingConfig(2, {{0, 1, PairKind::Square}})) == "[01]");

    const PairingConfig wide(7, {{0, 11, PairKind::Round}, {9, 10, PairKind::Square}});
    CHECK(render(wide) == "(0 1 2 3 4 5 6 7 8[9 10]11)");
    CHECK(parse(render(wide)) == wide);
}

TEST_CASE("enumeration examples") {
    std::vector<std::string> d2;
    enumerate(2, [&](const PairingConfig& c) {
        d2.push_back(render(c));
        return true;
    });
    CHECK(d2 == std::vector<std::string>{"01", "(01)", "[01]"});
    CHECK(enumerate_all(3).size() == 17);
    CHECK(enumerate_all(1).size() == 1);
    CHECK_THROWS_AS(enumerate(0, [](const PairingConfig&) { return true; }), std::domain_error);
}

TEST_CASE("enumeration stops early") {
    int seen = 0;
    enumerate(6, [&](const PairingConfig&) { return ++seen < 10; });
    CHECK(seen == 10);
}

TEST_CASE("brute_count examples") {
    CHECK(brute_count(0) == 1);
    CHECK(brute_count(4) == 17);
    CHECK(brute_count(5) == 33);
    CHECK_THROWS_AS(brute_count(-1), std::domain_error);
}

TEST_CASE("generator matches the typed-matching oracle, n <= 11") {
    for (int n = 0; n <= 11; ++n) {
        CAPTURE(n);
        std::set<std::vector<Pair>> generated;
        long total = 0;
        enumerate_bracketings(n, [&](std::span<const Pair> pairs) {
            generated.emplace(pairs.begin(), pairs.end());
            ++total;
            return true;
        });
        const auto expected = oracle::typed_matchings(n);
        CHECK(total == static_cast<long>(generated.size()));
        CHECK(generated == std::set<std::vector<Pair>>(expected.begin(), expected.end()));
        CHECK(BigInt(total) == p_rec(n));
    }
}

TEST_CASE("every enumerated configuration is structurally valid and parses back, d <= 6") {
    for (int d = 1; d <= 6; ++d) {
        std::set<std::string> seen;
        enumerate(d, [&](const PairingConfig& config) {
            const std::vector<Pair> pairs(config.pairs().begin(), config.pairs().end());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                CHECK((pairs[i].high - pairs[i].low) % 2 != 0);
                for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                    CHECK_FALSE(oracle::chords_cross(pairs[i], pairs[j]));
                }
            }
            const std::string text = render(config);
            CHECK(seen.insert(text).second);
            CHECK(parse(text) == config);
            return true;
        });
        CHECK(BigInt(static_cast<unsigned long>(seen.size())) == c_total(d));
    }
}

TEST_CASE("lexicographic sort") {
    auto all = enumerate_all(3);
    sort_lexicographically(all);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const PairingConfig& a, const PairingConfig& b) { return render(a) < render(b); }));
    CHECK(render(all.front()) == "(0(12)3)");
}

TEST_CASE("tokenizer") {
    const auto tokens = tokenize("(0 12)");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[1].element == 0);
    CHECK(tokens[2].element == 12);
    CHECK(tokenize("(012)").size() == 5);
}
