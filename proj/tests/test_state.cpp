#include "statefiber/state.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace statefiber;

namespace {
const char* kTrefoilPos = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
// trefoil with a positive R1 kink on arc 2
const char* kKinkedTrefoil = "X(1,7,2,6) X(5,1,6,8) X(7,5,8,4) X(2,4,3,3)";
const char* kTrefoilNeg = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFigure8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kGranny = "X(1,5,2,4) X(3,1,4,12) X(5,3,6,2) X(7,11,8,10) X(9,7,10,6) X(11,9,12,8)";
const char* kSquare = "X(1,5,2,4) X(3,1,4,12) X(5,3,6,2) X(9,6,10,7) X(11,8,12,9) X(7,10,8,11)";
}  // namespace

TEST_CASE("smoothing_pairs") {
    Crossing c{{1, 2, 3, 4}};
    auto a = smoothing_pairs(c, Resolution::A);
    CHECK(a[0] == std::pair{1, 2});
    CHECK(a[1] == std::pair{3, 4});
    auto b = smoothing_pairs(c, Resolution::B);
    CHECK(b[0] == std::pair{1, 4});
    CHECK(b[1] == std::pair{2, 3});
}

TEST_CASE("state selectors") {
    auto d = parse_pd(kTrefoilPos);
    CHECK(all_a_state(d).to_string() == "AAA");
    CHECK(all_b_state(d).to_string() == "BBB");
    CHECK(seifert_state(d).to_string() == "AAA");
    CHECK(seifert_state(parse_pd(kTrefoilNeg)).to_string() == "BBB");

    CHECK(parse_state(d, "all-a").to_string() == "AAA");
    CHECK(parse_state(d, "all-b").to_string() == "BBB");
    CHECK(parse_state(d, "seifert").to_string() == "AAA");
    CHECK(parse_state(d, "AbA").to_string() == "ABA");
    CHECK_THROWS_AS(parse_state(d, "AA"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state(d, "AXB"), std::invalid_argument);
}

TEST_CASE("seifert state follows crossing signs") {
    auto d = parse_pd(kSquare);
    auto s = seifert_state(d);
    for (int c = 0; c < d.crossing_count(); ++c)
        CHECK((s.choice[c] == Resolution::A) == (d.crossing_sign(c) > 0));
    CHECK(s.to_string() == "AAABBB");
}

TEST_CASE("resolve counts state circles") {
    auto d = parse_pd(kTrefoilPos);
    auto a = resolve(d, all_a_state(d));
    CHECK(a.count == 2);
    // circle ids are canonical: numbered by smallest member arc
    CHECK(a.circle_of_arc[1] == 0);
    CHECK(a.circle_of_arc[3] == 0);
    CHECK(a.circle_of_arc[5] == 0);
    CHECK(a.circle_of_arc[2] == 1);
    CHECK(a.circle_of_arc[4] == 1);
    CHECK(a.circle_of_arc[6] == 1);

    CHECK(resolve(d, all_b_state(d)).count == 3);
    CHECK(resolve(d, parse_state(d, "AAB")).count == 1);

    auto f8 = parse_pd(kFigure8);
    CHECK(resolve(f8, all_a_state(f8)).count == 3);
    CHECK(resolve(f8, all_b_state(f8)).count == 3);

    CHECK_THROWS_AS(resolve(d, KauffmanState{}), std::invalid_argument);
}

TEST_CASE("free loops are their own circles") {
    auto d = parse_pd("X(1,1,2,2) O O");
    auto circles = resolve(d, all_a_state(d));
    CHECK(circles.count == 4);
    CHECK(circles.free_loop_circles == 2);
    CHECK(resolve(parse_pd("O"), KauffmanState{}).count == 1);
}

TEST_CASE("surface euler characteristic is circles minus crossings") {
    auto d = parse_pd(kTrefoilPos);
    CHECK(euler_characteristic_of_surface(d, all_a_state(d)) == -1);
    CHECK(euler_characteristic_of_surface(d, all_b_state(d)) == 0);
    CHECK(euler_characteristic_of_surface(parse_pd("O"), KauffmanState{}) == 1);
}

TEST_CASE("resolve agrees with the dart-walking oracle") {
    for (const char* pd : {kTrefoilPos, kFigure8, kGranny}) {
        auto d = parse_pd(pd);
        for (const auto& s : enumerate_states(d))
            CHECK(resolve(d, s).count == oracle::circle_count(d, s));
    }
}

TEST_CASE("regions of the all-A trefoil") {
    auto d = parse_pd(kTrefoilPos);
    auto ra = regions(d, all_a_state(d));
    CHECK(ra.region_count == 3);
    // all three crossings share the annulus between the two state circles
    CHECK(ra.region_of_crossing[0] == ra.region_of_crossing[1]);
    CHECK(ra.region_of_crossing[1] == ra.region_of_crossing[2]);
}

TEST_CASE("region count is circle count plus one") {
    for (const char* pd : {kTrefoilPos, kFigure8, kSquare}) {
        auto d = parse_pd(pd);
        for (const auto& s : enumerate_states(d))
            CHECK(regions(d, s).region_count == resolve(d, s).count + 1);
    }
    // crossing-free case: every loop adds one region
    CHECK(regions(parse_pd("O"), KauffmanState{}).region_count == 2);
}

TEST_CASE("regions require a connected diagram") {
    auto d = parse_pd("X(1,1,2,2) O");
    CHECK_THROWS_AS(regions(d, all_a_state(d)), std::logic_error);
}

TEST_CASE("homogeneity") {
    auto d = parse_pd(kTrefoilPos);
    CHECK(is_homogeneous(d, all_a_state(d)));
    CHECK(is_homogeneous(d, all_b_state(d)));
    // on the 3-crossing trefoil the two labels of any mixed state end up on
    // opposite sides of the single state circle: every state is homogeneous
    for (const auto& s : enumerate_states(d))
        CHECK(is_homogeneous(d, s));

    // a kinked trefoil does have mixed regions
    auto k = parse_pd(kKinkedTrefoil);
    auto s = parse_state(k, "BAAA");
    CHECK_FALSE(is_homogeneous(k, s));
    auto mixed = find_mixed_region(k, s);
    REQUIRE(mixed.has_value());
    CHECK(mixed->crossings.size() >= 2);
    // the witness region really carries both labels
    bool has_a = false, has_b = false;
    for (int c : mixed->crossings) {
        has_a = has_a || s.choice[c] == Resolution::A;
        has_b = has_b || s.choice[c] == Resolution::B;
    }
    CHECK(has_a);
    CHECK(has_b);

    // single-label states are homogeneous by definition
    CHECK_FALSE(find_mixed_region(k, all_a_state(k)).has_value());
}

TEST_CASE("seifert states of the composite knots are homogeneous") {
    auto granny = parse_pd(kGranny);
    CHECK(is_homogeneous(granny, seifert_state(granny)));
    auto square = parse_pd(kSquare);
    CHECK(seifert_state(square).to_string() == "AAABBB");
    CHECK(is_homogeneous(square, seifert_state(square)));
}

TEST_CASE("state graph of the trefoil") {
    auto d = parse_pd(kTrefoilPos);
    auto ga = state_graph(d, all_a_state(d));
    CHECK(ga.vertex_count == 2);
    REQUIRE(ga.edges.size() == 3);
    for (const auto& e : ga.edges) {
        CHECK(e.u == 0);
        CHECK(e.v == 1);
        CHECK(e.label == Resolution::A);
    }

    auto gb = state_graph(d, all_b_state(d));
    CHECK(gb.vertex_count == 3);
    std::vector<std::pair<int, int>> ends;
    for (const auto& e : gb.edges)
        ends.emplace_back(e.u, e.v);
    std::sort(ends.begin(), ends.end());
    CHECK(ends == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("adequacy is the absence of self-loops") {
    auto kink = parse_pd("X(1,1,2,2)");
    CHECK(is_adequate(kink, all_a_state(kink)));
    CHECK_FALSE(is_adequate(kink, all_b_state(kink)));

    auto f8 = parse_pd(kFigure8);
    CHECK(is_adequate(f8, all_a_state(f8)));
    CHECK(is_adequate(f8, all_b_state(f8)));
}

TEST_CASE("reduce collapses parallel classes") {
    auto d = parse_pd(kTrefoilPos);
    auto r = reduce(state_graph(d, all_a_state(d)));
    CHECK(r.vertex_count == 2);
    REQUIRE(r.edges.size() == 1);
    CHECK(r.edges[0].multiplicity == 3);
    CHECK(r.edges[0].count_a == 3);
    CHECK(r.edges[0].count_b == 0);
    CHECK(r.edges[0].crossings == std::vector<int>{0, 1, 2});
    CHECK(r.euler_characteristic() == 1);
    CHECK_FALSE(r.has_self_loop());

    auto kink = parse_pd("X(1,1,2,2)");
    auto rb = reduce(state_graph(kink, all_b_state(kink)));
    CHECK(rb.has_self_loop());
    CHECK(rb.euler_characteristic() == 0);
}

TEST_CASE("mirror duality of state graphs") {
    // complementing the state on the mirror image yields the same graph with
    // A and B swapped, circle for circle
    for (const char* pd : {kTrefoilPos, kFigure8}) {
        auto d = parse_pd(pd);
        auto m = d.mirror();
        for (const auto& s : enumerate_states(d)) {
            KauffmanState sc;
            for (Resolution r : s.choice)
                sc.choice.push_back(r == Resolution::A ? Resolution::B : Resolution::A);
            auto g = state_graph(d, s);
            auto gm = state_graph(m, sc);
            REQUIRE(g.edges.size() == gm.edges.size());
            CHECK(g.vertex_count == gm.vertex_count);
            for (size_t i = 0; i < g.edges.size(); ++i) {
                CHECK(g.edges[i].u == gm.edges[i].u);
                CHECK(g.edges[i].v == gm.edges[i].v);
                CHECK(g.edges[i].label != gm.edges[i].label);
            }
        }
    }
}

TEST_CASE("flipping one resolution changes the circle count by one") {
    for (const char* pd : {kTrefoilPos, kFigure8}) {
        auto d = parse_pd(pd);
        for (const auto& s : enumerate_states(d)) {
            int base = resolve(d, s).count;
            for (int c = 0; c < d.crossing_count(); ++c) {
                KauffmanState flipped = s;
                flipped.choice[c] = flipped.choice[c] == Resolution::A ? Resolution::B
                                                                       : Resolution::A;
                int delta = resolve(d, flipped).count - base;
                CHECK((delta == 1 || delta == -1));
            }
        }
    }
}

TEST_CASE("enumerate_states order and cap") {
    auto d = parse_pd(kTrefoilPos);
    auto states = enumerate_states(d);
    REQUIRE(states.size() == 8);
    CHECK(states[0].to_string() == "AAA");
    CHECK(states[1].to_string() == "BAA");  // bit c of the index selects B at c
    CHECK(states[2].to_string() == "ABA");
    CHECK(states[7].to_string() == "BBB");
    CHECK_THROWS_AS(enumerate_states(d, 2), CapExceeded);

    int visits = 0;
    enumerate_states(d, [&](const KauffmanState&) { ++visits; }, 3);
    CHECK(visits == 8);
}
