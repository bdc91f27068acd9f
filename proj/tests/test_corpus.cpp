#include "statefiber/corpus.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace statefiber;

TEST_CASE("bundled corpus loads and parses") {
    auto fixtures = load_corpus();
    CHECK(fixtures.size() >= 20);
    std::set<std::string> names;
    for (const auto& f : fixtures) {
        CHECK(names.insert(f.name).second);  // unique names
        CHECK_NOTHROW(parse_pd(f.pd));
    }
    CHECK(names.count("unknot0") == 1);
    CHECK(names.count("trefoil") == 1);
    CHECK(names.count("pretzel_m2_3_7") == 1);
}

TEST_CASE("bundled corpus sweep is clean") {
    auto report = run_sweep(load_corpus());
    CAPTURE(report.mismatches.empty() ? "" : report.mismatches.front().fixture + "." +
                                                 report.mismatches.front().key);
    CHECK(report.all_passed());
    CHECK(report.fixtures_run == static_cast<int>(load_corpus().size()));
    // frozen expectations actually exercise something
    CHECK(report.checks > 300);
}

TEST_CASE("an injected mismatch is reported") {
    auto fixtures = parse_corpus("bad | X(1,1,2,2) | writhe=2#derived crossings=1#trivial");
    auto report = run_sweep(fixtures);
    CHECK(report.checks == 2);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].fixture == "bad");
    CHECK(report.mismatches[0].key == "writhe");
    CHECK(report.mismatches[0].expected == "2");
    CHECK(report.mismatches[0].computed == "1");
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("a fixture that fails analysis is reported, not fatal") {
    auto fixtures = parse_corpus("broken | X(1,2,3,4) | crossings=1#trivial\n"
                                 "fine | X(1,1,2,2) | crossings=1#trivial");
    auto report = run_sweep(fixtures);
    CHECK(report.fixtures_run == 2);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].fixture == "broken");
    CHECK(report.mismatches[0].key == "<analysis>");
}

TEST_CASE("corpus text format") {
    auto fixtures = parse_corpus("# comment\n\n  name | O O | pieces=2#trivial\n");
    REQUIRE(fixtures.size() == 1);
    CHECK(fixtures[0].name == "name");
    CHECK(fixtures[0].pd == "O O");
    REQUIRE(fixtures[0].expected.count("pieces") == 1);
    CHECK(fixtures[0].expected.at("pieces").value == "2");
    CHECK(fixtures[0].expected.at("pieces").tag == "trivial");

    CHECK(parse_corpus("").empty());
    CHECK_THROWS_AS(parse_corpus("only-a-name"), ParseError);
    CHECK_THROWS_AS(parse_corpus("n | O | pieces=1#guess"), ParseError);
    CHECK_THROWS_AS(parse_corpus("n | O | pieces#trivial"), ParseError);
}

TEST_CASE("fixture_line round-trips through the sweep") {
    auto line = fixture_line("kinked", "X(1,1,2,2)", 20);
    auto fixtures = parse_corpus(line);
    REQUIRE(fixtures.size() == 1);
    CHECK(fixtures[0].expected.at("crossings").tag == "trivial");
    CHECK(fixtures[0].expected.at("jones").tag == "derived");
    auto report = run_sweep(fixtures);
    CHECK(report.all_passed());
    CHECK(report.checks == static_cast<int>(fixtures[0].expected.size()));
}

TEST_CASE("compact jones serialization") {
    CHECK(jones_to_compact_string(jones_polynomial(parse_pd(
              "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"))) == "1*t^(2/2)+1*t^(6/2)-1*t^(8/2)");
    CHECK(jones_to_compact_string(LaurentPoly{}) == "0");
    // no whitespace ever: values must survive the corpus tokenizer
    for (const auto& f : load_corpus()) {
        auto it = f.expected.find("jones");
        if (it != f.expected.end())
            CHECK(it->second.value.find(' ') == std::string::npos);
    }
}

TEST_CASE("torus_2n_pd generator") {
    CHECK_THROWS_AS(torus_2n_pd(1), std::invalid_argument);
    CHECK(torus_2n_pd(2) == "X(1,4,2,3) X(4,1,3,2)");  // the Hopf link

    for (int n = 2; n <= 9; ++n) {
        auto d = parse_pd(torus_2n_pd(n));
        CAPTURE(n);
        CHECK(d.crossing_count() == n);
        CHECK(d.is_connected());
        CHECK(d.is_alternating());
        CHECK(d.is_prime());
        CHECK(d.writhe() == n);
        CHECK(d.orientation().component_count == (n % 2 == 0 ? 2 : 1));
        // closed positive 2-braid: two Seifert circles joined n times
        auto g = state_graph(d, all_a_state(d));
        CHECK(g.vertex_count == 2);
        auto reduced = reduce(g);
        REQUIRE(reduced.edges.size() == 1);
        CHECK(reduced.edges[0].multiplicity == n);
        CHECK(is_tree(reduced));
        CHECK(detect_fiber(d, all_a_state(d)).verdict == Verdict::Fiber);
        auto base = classify_base_case(d);
        REQUIRE(base.applicable);
        CHECK(base.positive_2braid);
        CHECK(base.equivalent);
    }
}

TEST_CASE("torus corpus rows match the generator") {
    auto fixtures = load_corpus();
    for (const auto& f : fixtures) {
        if (f.name.rfind("torus_2_", 0) != 0)
            continue;
        int n = std::stoi(f.name.substr(8));
        CHECK(f.pd == torus_2n_pd(n));
    }
}
