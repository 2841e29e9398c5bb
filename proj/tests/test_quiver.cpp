#include <doctest.h>

#include "support.hpp"

using namespace ardet;
namespace ts = ardet::testsupport;

TEST_SUITE_BEGIN("quiver");

TEST_CASE("parse alternating A_6") {
    const Quiver q = parse_quiver("1 < 2 > 3 < 4 > 5 < 6");
    CHECK(q.n() == 6);
    CHECK(q.relations().empty());
    const std::vector<Dir> expected{Dir::Left, Dir::Right, Dir::Left, Dir::Right, Dir::Left};
    CHECK(q.orientation() == expected);
}

TEST_CASE("parse smallest non-simple case") {
    const Quiver q = parse_quiver("1 > 2");
    CHECK(q.n() == 2);
    CHECK(q.arrow_right(1));
    CHECK(q.relations().empty());
}

TEST_CASE("parse the 13-vertex bound quiver") {
    const Quiver q = ts::a13_bound();
    CHECK(q.n() == 13);
    REQUIRE(q.relations().size() == 4);
    CHECK(q.relations()[0].vertices == std::vector<int>{3, 4, 5});
    CHECK(q.relations()[1].vertices == std::vector<int>{8, 7, 6, 5}); // sorted by lo
    CHECK(q.relations()[1].lo() == 5);
    CHECK(q.relations()[1].hi() == 8);
    CHECK(q.relations()[2].vertices == std::vector<int>{8, 9, 10});
    CHECK(q.relations()[3].vertices == std::vector<int>{11, 12, 13});
}

TEST_CASE("parse n = 1") {
    const Quiver q = parse_quiver("1");
    CHECK(q.n() == 1);
    CHECK(q.orientation().empty());
    CHECK(parse_quiver(q.render()) == q);
}

TEST_CASE("comments and blank lines are ignored") {
    const Quiver q = parse_quiver("# leading comment\n\n1 > 2 > 3  # trailing\n\nrel: 1 2 3\n");
    CHECK(q.n() == 3);
    CHECK(q.relations().size() == 1);
}

TEST_CASE("json ingestion mirrors the text format") {
    const Quiver q = parse_quiver(
        R"({"n":3, "orientation":["R","R"], "relations":[[1,2,3]]})");
    CHECK(q == parse_quiver("1 > 2 > 3\nrel: 1 2 3"));
}

TEST_CASE("parse errors name the offending line") {
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 2 >"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_quiver("1 ? 2"), doctest::Contains("expected < or >"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 3"), doctest::Contains("expected vertex 2"),
                         ParseError);
    // relation against the orientation
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 2 < 3\nrel: 1 2 3"),
                         doctest::Contains("runs against arrow 2"), ParseError);
    // too short
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 2 > 3\nrel: 1 2"),
                         doctest::Contains("length >= 2"), ParseError);
    // out of range
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 2 > 3\nrel: 2 3 4"),
                         doctest::Contains("out of range"), ParseError);
    // not consecutive
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 2 > 3 > 4\nrel: 1 2 4"),
                         doctest::Contains("step"), ParseError);
    // non-reduced set names the containing line
    CHECK_THROWS_WITH_AS(parse_quiver("1 > 2 > 3 > 4 > 5\nrel: 2 3 4\nrel: 1 2 3 4 5"),
                         doctest::Contains("line 3"), ParseError);
    // duplicates are rejected too
    CHECK_THROWS_AS(parse_quiver("1 > 2 > 3\nrel: 1 2 3\nrel: 1 2 3"), ParseError);
}

TEST_CASE("sources, sinks, p and r") {
    SUBCASE("13-vertex example") {
        const auto s = source_sink_summary(ts::a13_path());
        CHECK(s.sources == std::vector<int>{1, 3, 8});
        CHECK(s.sinks == std::vector<int>{2, 5, 13});
        CHECK(s.p == 2);
        CHECK(s.r == 3);
    }
    SUBCASE("linear orientation") {
        const auto s = source_sink_summary(ts::linear(7));
        CHECK(s.sources == std::vector<int>{1});
        CHECK(s.sinks == std::vector<int>{7});
        CHECK(s.p == 0);
        CHECK(s.r == 1);
    }
    SUBCASE("alternating A_4") {
        const auto s = source_sink_summary(parse_quiver("1 > 2 < 3 > 4"));
        CHECK(s.sources == std::vector<int>{1, 3});
        CHECK(s.sinks == std::vector<int>{2, 4});
        CHECK(s.p == 1);
        CHECK(s.r == 2);
    }
}

TEST_CASE("sink ideals of the 13-vertex bound quiver") {
    const auto reports = sink_ideals(ts::a13_bound());
    REQUIRE(reports.size() == 3);

    CHECK(reports[0].sink == 2);
    CHECK(reports[0].case_no == 3);
    CHECK(reports[0].lo == 2);
    CHECK(reports[0].hi == 3);
    CHECK(reports[0].restricted.empty());
    CHECK_FALSE(reports[0].nonzero);

    CHECK(reports[1].sink == 5);
    CHECK(reports[1].case_no == 5);
    CHECK(reports[1].lo == 3);
    CHECK(reports[1].hi == 8);
    CHECK(reports[1].restricted.size() == 2);
    CHECK(reports[1].nonzero);

    CHECK(reports[2].sink == 13);
    CHECK(reports[2].case_no == 2);
    CHECK(reports[2].lo == 8);
    CHECK(reports[2].hi == 13);
    CHECK(reports[2].restricted.size() == 2);
    CHECK(reports[2].nonzero);

    CHECK(nonzero_sink_ideal_count(ts::a13_bound()) == 2);
}

TEST_CASE("sink ideals of the opposite 13-vertex quiver") {
    // Sink 3 sits between the sources 2 and 5 with no relation on its left
    // side, so its ideal counts as zero even though the restriction to <2,5>
    // is nonempty; only J_8 survives.
    const auto reports = sink_ideals(ts::a13_opposite());
    REQUIRE(reports.size() == 3);

    CHECK(reports[0].sink == 1);
    CHECK(reports[0].case_no == 1);
    CHECK(reports[0].restricted.empty());
    CHECK_FALSE(reports[0].nonzero);

    CHECK(reports[1].sink == 3);
    CHECK(reports[1].case_no == 5);
    CHECK(reports[1].lo == 2);
    CHECK(reports[1].hi == 5);
    CHECK(reports[1].restricted.size() == 1); // the path on [3,5]
    CHECK_FALSE(reports[1].nonzero);          // left side <2,3> is clean

    CHECK(reports[2].sink == 8);
    CHECK(reports[2].case_no == 4);
    CHECK(reports[2].lo == 5);
    CHECK(reports[2].hi == 8);
    CHECK(reports[2].restricted.size() == 1);
    CHECK(reports[2].nonzero);

    CHECK(nonzero_sink_ideal_count(ts::a13_opposite()) == 1);
}

TEST_CASE("empty relation set gives all-zero sink ideals") {
    const Quiver q = ts::a13_path();
    for (const auto& rep : sink_ideals(q)) {
        CHECK(rep.restricted.empty());
        CHECK_FALSE(rep.nonzero);
    }
    CHECK(nonzero_sink_ideal_count(q) == 0);
}

TEST_CASE("sink ideals are undefined with a unique sink") {
    CHECK_THROWS_AS(sink_ideals(ts::linear(5)), ValidationError);
    CHECK_THROWS_AS(sink_ideals(parse_quiver("1")), ValidationError);
}

TEST_CASE("sink adjacent to both flanking sources has zero ideal") {
    // 1 < 2 > 3 < 4 > 5: sink 3 sits at s+1 = s'-1; no zero path fits beside
    // it, so its ideal is zero whatever the relations elsewhere
    const Quiver q = parse_quiver("1 < 2 > 3 < 4 > 5");
    const auto reports = sink_ideals(q);
    REQUIRE(reports.size() == 3);
    CHECK(reports[1].sink == 3);
    CHECK(reports[1].case_no == 5);
    CHECK_FALSE(reports[1].nonzero);
}

TEST_CASE("classifier is total over every orientation up to n = 8") {
    for (int n = 2; n <= 8; ++n)
        ts::for_each_orientation(n, [](const Quiver& q) {
            if (q.sink_count() < 2) {
                CHECK_THROWS_AS(sink_ideals(q), ValidationError);
                return;
            }
            const auto reports = sink_ideals(q);
            CHECK(static_cast<int>(reports.size()) == q.sink_count());
            for (const auto& rep : reports) {
                CHECK(rep.case_no >= 1);
                CHECK(rep.case_no <= 5);
            }
        });
}

TEST_CASE("vertex classes partition and alternate") {
    for (int n = 2; n <= 8; ++n)
        ts::for_each_orientation(n, [](const Quiver& q) {
            int both = 0, neither_src_nor_sink = 0;
            for (int v = 1; v <= q.n(); ++v) {
                if (q.is_source(v) && q.is_sink(v)) ++both;
                if (!q.is_source(v) && !q.is_sink(v)) ++neither_src_nor_sink;
            }
            CHECK(both == 0);
            const long diff = static_cast<long>(q.sources().size()) -
                              static_cast<long>(q.sinks().size());
            CHECK(diff >= -1);
            CHECK(diff <= 1);
        });
}

TEST_CASE("parse then render then parse is the identity") {
    ts::for_each_orientation(6, [](const Quiver& q) { CHECK(parse_quiver(q.render()) == q); });
    ts::for_each_random_bound(7, 2, 20260809, [](const Quiver& q) {
        CHECK(parse_quiver(q.render()) == q);
    });
    CHECK(parse_quiver(ts::a13_bound().render()) == ts::a13_bound());
}

TEST_CASE("programmatic construction validates") {
    CHECK_THROWS_AS(Quiver::make(0, {}), ValidationError);
    CHECK_THROWS_AS(Quiver::make(3, {Dir::Right}), ValidationError);
    CHECK_THROWS_AS(Quiver::make(3, {Dir::Right, Dir::Left}, {{{1, 2, 3}}}),
                    ValidationError);
}

TEST_SUITE_END();
