#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "sokoban/state.hpp"

using namespace sokoban;

namespace {

int floor_count(const Grid& g) {
    int n = 0;
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c)
            if (!g.is_wall({r, c})) ++n;
    return n;
}

}  // namespace

TEST_CASE("initial_state normalizes the pusher") {
    Grid l1 = parse_level(corpus::kL1);
    State s1 = initial_state(l1);
    CHECK(s1.boxes == BoxSet{{1, 2}});
    CHECK(s1.pusher_norm == Square{1, 1});

    State s3 = initial_state(parse_level(corpus::kL3));
    CHECK(s3.boxes == BoxSet{{1, 4}});
    CHECK(s3.pusher_norm == Square{1, 1});

    State solved = initial_state(parse_level(corpus::kSolved));
    CHECK(solved.boxes == BoxSet{{1, 2}});
    CHECK(solved.pusher_norm == Square{1, 1});
}

TEST_CASE("reachable_region") {
    Grid l1 = parse_level(corpus::kL1);
    CHECK(reachable_region(l1, l1.initial_boxes(), {1, 1}) == std::vector<Square>{{1, 1}});
    CHECK(reachable_region(l1, BoxSet{{1, 3}}, {1, 2}) == std::vector<Square>{{1, 1}, {1, 2}});

    Grid l3 = parse_level(corpus::kL3);
    CHECK(reachable_region(l3, l3.initial_boxes(), {1, 3}) == std::vector<Square>{{1, 1}, {1, 2}, {1, 3}});

    CHECK_THROWS_AS(reachable_region(l1, l1.initial_boxes(), {1, 2}), SokobanError);
    CHECK_THROWS_AS(reachable_region(l1, l1.initial_boxes(), {0, 0}), SokobanError);
}

TEST_CASE("legal_pushes") {
    Grid l1 = parse_level(corpus::kL1);
    auto p1 = legal_pushes(l1, initial_state(l1));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].box_from == Square{1, 2});
    CHECK(p1[0].dir == Direction::Right);

    Grid solved = parse_level(corpus::kSolved);
    CHECK(legal_pushes(solved, initial_state(solved)).empty());

    Grid l3 = parse_level(corpus::kL3);
    auto p3 = legal_pushes(l3, initial_state(l3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].box_from == Square{1, 4});
    CHECK(p3[0].dir == Direction::Right);
}

TEST_CASE("legal_pushes ordering is box row-major then U,R,D,L") {
    Grid g = parse_level("#######\n#     #\n# $ $ #\n#  @  #\n#.   .#\n#######");
    auto pushes = legal_pushes(g, initial_state(g));
    std::vector<std::pair<Square, Direction>> got;
    for (const Step& s : pushes) got.push_back({s.box_from, s.dir});
    std::vector<std::pair<Square, Direction>> want;
    for (Square b : {Square{2, 2}, Square{2, 4}})
        for (Direction d : kDirections) want.push_back({b, d});
    CHECK(got == want);
}

TEST_CASE("apply_push") {
    Grid l1 = parse_level(corpus::kL1);
    State after = apply_push(l1, initial_state(l1), Step{0, {1, 2}, Direction::Right});
    CHECK(after.boxes == BoxSet{{1, 3}});
    CHECK(after.pusher_norm == Square{1, 1});
    CHECK(is_goal_state(l1, after));

    Grid l3 = parse_level(corpus::kL3);
    State after3 = apply_push(l3, initial_state(l3), Step{0, {1, 4}, Direction::Right});
    CHECK(after3.boxes == BoxSet{{1, 5}});
    CHECK(after3.pusher_norm == Square{1, 1});

    try {
        apply_push(l1, initial_state(l1), Step{0, {1, 2}, Direction::Left});
        FAIL("push should be illegal");
    } catch (const SokobanError& e) {
        CHECK(e.code() == ErrorCode::IllegalPush);
    }
    CHECK_THROWS_AS(apply_push(l1, initial_state(l1), Step{0, {1, 3}, Direction::Right}), SokobanError);
}

TEST_CASE("is_goal_state") {
    Grid l1 = parse_level(corpus::kL1);
    CHECK(is_goal_state(l1, State{BoxSet{{1, 3}}, {1, 1}}));
    CHECK_FALSE(is_goal_state(l1, initial_state(l1)));
    Grid two = parse_level("######\n#@*$.#\n######");
    CHECK_FALSE(is_goal_state(two, initial_state(two)));
}

TEST_CASE("state_key identity") {
    Grid g = parse_level(corpus::kL3);
    State a = make_state(g, g.initial_boxes(), {1, 1});
    State b = make_state(g, g.initial_boxes(), {1, 3});
    CHECK(state_key(g, a) == state_key(g, b));

    Grid split = parse_level("#######\n#@ $  #\n#.#####\n#######");
    State left = make_state(split, split.initial_boxes(), {1, 1});
    State right = make_state(split, split.initial_boxes(), {1, 5});
    CHECK_FALSE(state_key(split, left) == state_key(split, right));

    State moved = make_state(g, BoxSet{{1, 3}}, {1, 1});
    CHECK_FALSE(state_key(g, a) == state_key(g, moved));
}

TEST_CASE("property: push mechanics over random push sequences") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        Grid g = parse_level(corpus::random_valid_level(rng));
        State s = initial_state(g);
        for (int depth = 0; depth < 25; ++depth) {
            auto pushes = legal_pushes(g, s);
            if (pushes.empty()) break;
            const Step& step = pushes[std::uniform_int_distribution<std::size_t>(0, pushes.size() - 1)(rng)];
            State next = apply_push(g, s, step);
            CHECK(next.boxes.size() == s.boxes.size());
            CHECK(next.boxes.contains(step.box_to()));
            CHECK_FALSE(next.boxes.contains(step.box_from));
            CHECK_FALSE(g.is_wall(next.pusher_norm));
            CHECK_FALSE(next.boxes.contains(next.pusher_norm));
            s = next;
        }
    }
}

TEST_CASE("property: normalization is region invariant") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Grid g = parse_level(corpus::random_valid_level(rng));
        State s = initial_state(g);
        auto region = oracle::flood(g, {g.initial_boxes().begin(), g.initial_boxes().end()}, g.initial_pusher());
        CHECK(s.pusher_norm == *region.begin());
        for (const Square& p : region) CHECK(state_key(g, make_state(g, s.boxes, p)) == state_key(g, s));
    }
}

TEST_CASE("property: legal_pushes equals brute-force enumeration on small grids") {
    std::mt19937 rng(5);
    int checked = 0;
    while (checked < 300) {
        Grid g = parse_level(corpus::random_valid_level(rng, 6));
        if (floor_count(g) > 20) continue;
        ++checked;
        State s = initial_state(g);
        std::vector<Square> boxes(s.boxes.begin(), s.boxes.end());
        // Every (box, direction) pair, filtered by the reference flood fill.
        std::set<std::pair<Square, int>> want;
        for (auto [b, d] : oracle::pushes(g, boxes, g.initial_pusher())) want.insert({b, d});
        std::set<std::pair<Square, int>> got;
        for (const Step& st : legal_pushes(g, s)) got.insert({st.box_from, static_cast<int>(st.dir)});
        CHECK(got == want);
    }
}
