#include <catch2/catch_amalgamated.hpp>

#include "rookdist/corpus.hpp"
#include "rookdist/io.hpp"

using namespace rookdist;

TEST_CASE("coloring wire format") {
    Coloring c(GridSpec(2, 3), {1, 0, 2,
                                0, 2, 1});
    Json j = coloring_to_json(c);
    CHECK(j["n"] == 2);
    CHECK(j["m"] == 3);
    CHECK(j["cells"] == Json::parse("[[1,0,2],[0,2,1]]"));
    CHECK(coloring_from_json(j) == c);
}

TEST_CASE("list assignment wire format") {
    ListAssignment L(GridSpec(1, 2), {{2, 1}, {0}});
    Json j = list_assignment_to_json(L);
    CHECK(j["lists"] == Json::parse("[[[1,2],[0]]]"));  // lists are emitted canonical
    CHECK(list_assignment_from_json(j) == L);
}

TEST_CASE("round trip on seeded instances") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        GridSpec g(1 + static_cast<int>(rng.below(3)), 4 + static_cast<int>(rng.below(3)));
        Coloring c = random_coloring(g, 4, rng);
        CHECK(coloring_from_json(coloring_to_json(c)) == c);
        ListAssignment L = random_list_assignment(g, 2, 5, rng);
        CHECK(list_assignment_from_json(list_assignment_to_json(L)) == L);
        // emit is stable under re-parsing
        CHECK(list_assignment_to_json(list_assignment_from_json(list_assignment_to_json(L))) ==
              list_assignment_to_json(L));
    }
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"n":2,"m":2,"cells":[[1,2],[3,4]]})")),
                    std::invalid_argument);  // square grid
    CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"n":2,"m":3,"cells":[[1,2,3]]})")),
                    std::invalid_argument);  // missing row
    CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"n":1,"m":2,"cells":[[1,2,3]]})")),
                    std::invalid_argument);  // ragged row
    CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"n":1,"m":2,"cells":[[1,-2]]})")),
                    std::invalid_argument);  // negative color
    CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"n":1,"m":2})")),
                    std::invalid_argument);  // no cells
    CHECK_THROWS_AS(list_assignment_from_json(Json::parse(R"({"n":1,"m":2,"lists":[[[1],[]]]})")),
                    std::invalid_argument);  // empty list
    CHECK_THROWS_AS(list_assignment_from_json(Json::parse(R"({"n":1,"m":2,"lists":[[1,2]]})")),
                    std::invalid_argument);  // entry not an array
}

TEST_CASE("file helpers") {
    std::string path = "io_test_tmp.json";
    Coloring c(GridSpec(1, 3), {4, 5, 6});
    write_json_file(path, coloring_to_json(c));
    CHECK(coloring_from_json(read_json_file(path)) == c);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("definitely_missing_file.json"), std::runtime_error);
}
