#include <doctest.h>

#include <stdexcept>

#include "vexil/triple.hpp"

using namespace vexil;

TEST_CASE("triple validation") {
    CHECK_THROWS_AS(Triple({1, 2}, {2}, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Triple({2}, {1}, {3}), std::invalid_argument);   // k > p
    CHECK_THROWS_AS(Triple({1, 1}, {2, 1}, {3, 3}), std::invalid_argument);  // p drops
    CHECK_THROWS_AS(Triple({1, 2}, {2, 2}, {1, 3}), std::invalid_argument);  // q rises
    CHECK_THROWS_AS(Triple({0}, {1}, {1}), std::invalid_argument);
}

TEST_CASE("reduce_triple") {
    Triple t({2, 2, 3, 4}, {4, 5, 6, 7}, {8, 7, 6, 3});
    CHECK(reduce_triple(t) == Triple({2, 3}, {4, 6}, {8, 6}));

    Triple essential({1, 2}, {2, 2}, {3, 1});
    CHECK(reduce_triple(essential) == essential);

    // earlier condition implied by the later one of equal value
    CHECK(reduce_triple(Triple({2, 3}, {2, 3}, {3, 3})) == Triple({3}, {3}, {3}));

    // all conditions vacuous: the locus is the whole space
    CHECK(reduce_triple(Triple({1, 2}, {4, 5}, {2, 1})).empty());

    CHECK(is_essential(reduce_triple(t)));
    // reduce is idempotent
    CHECK(reduce_triple(reduce_triple(t)) == reduce_triple(t));
}

TEST_CASE("inflate_triple") {
    InflatedTriple a = inflate_triple(Triple({2}, {3}, {3}));
    CHECK(a.kp == std::vector<int>{1, 2});
    CHECK(a.pp == std::vector<int>{2, 3});
    CHECK(a.qp == std::vector<int>{3, 3});

    // already gap-free input is unchanged
    InflatedTriple b = inflate_triple(Triple({1, 2}, {2, 2}, {3, 1}));
    CHECK(b.kp == std::vector<int>{1, 2});
    CHECK(b.pp == std::vector<int>{2, 2});
    CHECK(b.qp == std::vector<int>{3, 1});

    // p cannot drop below the previous entry: the q branch fires
    InflatedTriple c = inflate_triple(Triple({2}, {2}, {3}));
    CHECK(c.kp == std::vector<int>{1, 2});
    CHECK(c.pp == std::vector<int>{1, 2});
    CHECK(c.qp == std::vector<int>{3, 3});

    CHECK_THROWS_AS(inflate_triple(Triple({2, 2}, {3, 3}, {3, 3})), std::invalid_argument);

    // lambda values are constant on blocks and weakly decreasing
    InflatedTriple d = inflate_triple(Triple({2, 4}, {4, 6}, {8, 5}));
    for (int i = 0; i + 1 < d.rows(); ++i)
        CHECK(d.qp[i] - d.pp[i] + i + 1 >= d.qp[i + 1] - d.pp[i + 1] + i + 2);
    CHECK(lambda_of(Triple(d.kp, d.pp, d.qp)) == lambda_of(d.essential));
}

TEST_CASE("gapless_presentation prefers the quotient side") {
    InflatedTriple g = gapless_presentation(Triple({2}, {8}, {8}));
    CHECK(g.kp == std::vector<int>{1, 2});
    CHECK(g.pp == std::vector<int>{8, 8});
    CHECK(g.qp == std::vector<int>{9, 8});
    CHECK(lambda_of(Triple(g.kp, g.pp, g.qp)) == lambda_of(g.essential));

    // equal q entries across a gap force the p branch
    InflatedTriple h = gapless_presentation(Triple({1, 3}, {2, 6}, {4, 4}));
    CHECK(h.kp == std::vector<int>{1, 2, 3});
    CHECK(h.qp == std::vector<int>{4, 4, 4});
    CHECK(h.pp == std::vector<int>{2, 5, 6});
}

TEST_CASE("pair set of the inflated triple") {
    // k = (2,5): pairs i <= k_a < j
    InflatedTriple s = inflate_triple(Triple({2, 5}, {5, 8}, {9, 4}));
    std::vector<std::pair<int, int>> expected{{1, 3}, {1, 4}, {1, 5},
                                              {2, 3}, {2, 4}, {2, 5}};
    CHECK(s.pair_set == expected);
}

TEST_CASE("lambda_of") {
    CHECK(lambda_of(Triple({2, 2, 3}, {4, 5, 6}, {8, 7, 6})) == Partition{6, 6, 3});
    CHECK(lambda_of(Triple({1, 2}, {2, 2}, {3, 1})) == Partition{2, 1});
    CHECK(lambda_of(Triple({2, 3}, {2, 3}, {3, 3})) == Partition{3, 3, 3});
    // lambda_of composed with reduce is lambda_of
    Triple t({2, 2, 3, 4}, {4, 5, 6, 7}, {8, 7, 6, 3});
    CHECK(lambda_of(reduce_triple(t)) == lambda_of(t));
}
