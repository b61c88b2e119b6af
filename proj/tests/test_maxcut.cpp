#include "doctest.h"

#include "hamqaoa/graph.hpp"

#include <stdexcept>

using namespace hamqaoa;

TEST_CASE("cut_value counts crossing weight") {
    const auto g = InteractionGraph::make(4, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 3, 3.0}, {3, 0, 1.0}});
    CHECK(cut_value(g, {1, -1, 1, -1}) == doctest::Approx(7.0));
    CHECK(cut_value(g, {1, 1, 1, 1}) == doctest::Approx(0.0));
    CHECK(cut_value(g, {1, 1, -1, -1}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(cut_value(g, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cut_value(g, {1, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("exact max cut on small rings") {
    const auto even = max_cut_exact(ring_graph(4));
    CHECK(even.value == doctest::Approx(4.0));
    CHECK(even.signs == SignString{1, -1, 1, -1});

    // Odd ring: one edge is always uncut.
    const auto odd = max_cut_exact(ring_graph(5));
    CHECK(odd.value == doctest::Approx(4.0));
    CHECK(odd.signs[0] == 1);
    CHECK(cut_value(ring_graph(5), odd.signs) == doctest::Approx(4.0));
}

TEST_CASE("exact max cut resolves ties lexicographically") {
    // complete(4): every balanced 2+2 split cuts 4 edges. The smallest string
    // with s[0] = +1 keeps the next vertex positive too.
    const auto r = max_cut_exact(complete_graph(4));
    CHECK(r.value == doctest::Approx(4.0));
    CHECK(r.signs == SignString{1, 1, -1, -1});
}

TEST_CASE("exact max cut on a weighted graph") {
    // Heavy edge (0,1) dominates; exactly one of the unit edges can join it.
    const auto g = InteractionGraph::make(3, {{0, 1, 10.0}, {1, 2, 1.0}, {2, 0, 1.0}});
    const auto r = max_cut_exact(g);
    CHECK(r.value == doctest::Approx(11.0));
    CHECK(r.signs[0] != r.signs[1]);
}

TEST_CASE("exact max cut size guard") {
    const auto big = path_graph(27);
    CHECK_THROWS_AS(max_cut_exact(big), std::domain_error);
}

TEST_CASE("local search matches exact on small graphs") {
    for (int n : {6, 8}) {
        const auto g = ring_graph(n);
        const auto exact = max_cut_exact(g);
        const auto local = max_cut_local_search(g, 20, 123);
        CHECK(local.value == doctest::Approx(exact.value));
        CHECK(cut_value(g, local.signs) == doctest::Approx(local.value));
    }
    const auto h = heawood_graph();
    const auto exact = max_cut_exact(h);
    const auto local = max_cut_local_search(h, 40, 7);
    CHECK(local.value <= exact.value + 1e-12);
    CHECK(local.value == doctest::Approx(exact.value));
}

TEST_CASE("local search is deterministic per seed") {
    const auto g = random_regular_graph(16, 3, 5);
    const auto a = max_cut_local_search(g, 10, 77);
    const auto b = max_cut_local_search(g, 10, 77);
    CHECK(a.value == b.value);
    CHECK(a.signs == b.signs);
}

TEST_CASE("choose_signs honors the policy") {
    const auto g = ring_graph(6);
    const auto exact = choose_signs(g, SignPolicy::exact);
    CHECK(cut_value(g, exact) == doctest::Approx(6.0));
    const auto local = choose_signs(g, SignPolicy::local_search, 3);
    CHECK(cut_value(g, local) == doctest::Approx(6.0));
    const auto rnd1 = choose_signs(g, SignPolicy::random, 11);
    const auto rnd2 = choose_signs(g, SignPolicy::random, 11);
    CHECK(rnd1 == rnd2);
    validate_signs(g, rnd1);
}
