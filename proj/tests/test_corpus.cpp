#include <catch2/catch_amalgamated.hpp>

#include "rookdist/corpus.hpp"
#include "rookdist/io.hpp"

using namespace rookdist;

namespace {

bool column_uniform(const ListAssignment& L, int j) {
    for (int i = 2; i <= L.grid().n; ++i)
        if (L.at(i, j) != L.at(1, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("seeded generation is bit-reproducible") {
    auto a = generate_corpus(2, 4, 2, 5, 30, 12345);
    auto b = generate_corpus(2, 4, 2, 5, 30, 12345);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(list_assignment_to_json(a[i]).dump() == list_assignment_to_json(b[i]).dump());

    auto c = generate_corpus(2, 4, 2, 5, 30, 54321);
    bool any_different = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == c[i])) any_different = true;
    CHECK(any_different);
}

TEST_CASE("strata deliver the promised column structure") {
    SplitMix64 rng(3);
    GridSpec g(3, 5);

    ListAssignment uni = random_list_assignment(g, 2, 6, rng, ListStratum::uniform_columns);
    for (int j = 1; j <= g.m; ++j) CHECK(column_uniform(uni, j));

    ListAssignment none = random_list_assignment(g, 2, 6, rng, ListStratum::no_uniform_columns);
    for (int j = 1; j <= g.m; ++j) CHECK(!column_uniform(none, j));

    ListAssignment mixed = random_list_assignment(g, 2, 6, rng, ListStratum::mixed_columns);
    bool has_uniform = false, has_non_uniform = false;
    for (int j = 1; j <= g.m; ++j)
        (column_uniform(mixed, j) ? has_uniform : has_non_uniform) = true;
    CHECK(has_uniform);
    CHECK(has_non_uniform);
}

TEST_CASE("corpus instances cycle through the strata") {
    auto corpus = generate_corpus(2, 5, 2, 6, 9, 7);
    REQUIRE(corpus.size() == 9);
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        bool all_uniform = true, any_uniform = false;
        for (int j = 1; j <= 5; ++j) {
            bool u = column_uniform(corpus[idx], j);
            all_uniform = all_uniform && u;
            any_uniform = any_uniform || u;
        }
        switch (idx % 3) {
            case 0: CHECK(all_uniform); break;
            case 1: CHECK(!any_uniform); break;
            default: CHECK((any_uniform && !all_uniform)); break;
        }
    }
}

TEST_CASE("lists respect size and universe") {
    SplitMix64 rng(11);
    ListAssignment L = random_list_assignment(GridSpec(2, 4), 3, 7, rng);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 4; ++j) {
            const auto& list = L.at(i, j);
            CHECK(list.size() == 3);
            for (Color c : list) {
                CHECK(c >= 0);
                CHECK(c < 7);
            }
        }
    }
}

TEST_CASE("impossible strata are rejected") {
    SplitMix64 rng(1);
    CHECK_THROWS_AS(
        random_list_assignment(GridSpec(1, 3), 2, 5, rng, ListStratum::no_uniform_columns),
        std::invalid_argument);
    CHECK_THROWS_AS(
        random_list_assignment(GridSpec(2, 3), 2, 2, rng, ListStratum::no_uniform_columns),
        std::invalid_argument);
    CHECK_THROWS_AS(random_list(5, 3, rng), std::invalid_argument);
}

TEST_CASE("single-row corpora fall back to uniform columns") {
    auto corpus = generate_corpus(1, 4, 2, 5, 6, 99);
    CHECK(corpus.size() == 6);
    for (const auto& L : corpus)
        for (int j = 1; j <= 4; ++j) CHECK(column_uniform(L, j));
}

TEST_CASE("random colorings stay inside the palette") {
    SplitMix64 rng(2);
    Coloring c = random_coloring(GridSpec(3, 5), 4, rng);
    for (Color x : c.cells()) {
        CHECK(x >= 0);
        CHECK(x < 4);
    }
}
