#include "doctest.h"
#include "hurwitz/closed_form.hpp"

using namespace hurwitz;

TEST_CASE("tree_count_genus0") {
    CHECK(tree_count_genus0(ones_partition(2)) == 1);
    CHECK(tree_count_genus0(make_partition({2, 1})) == 2);
    CHECK(tree_count_genus0(make_partition({1, 1, 2})) == 8);
    CHECK(tree_count_genus0(ones_partition(1)) == 1);
    CHECK(tree_count_genus0(make_partition({4})) == 16);  // Cayley: 4^2
    // nonnegative integer for d >= 2
    for (int d = 2; d <= 10; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            Rational t = tree_count_genus0(alpha);
            CHECK(is_integer(t));
            CHECK(t >= 0);
        }
    }
}

TEST_CASE("graph_count_genus1") {
    CHECK(graph_count_genus1(make_partition({2, 1})) == 4);
    CHECK(graph_count_genus1(ones_partition(2)) == make_rational(1, 2));
    CHECK(graph_count_genus1(ones_partition(1)) == 0);
    // twice the count is an integer
    for (int d = 1; d <= 10; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            CHECK(is_integer(graph_count_genus1(alpha) * 2));
        }
    }
}

TEST_CASE("hurwitz_closed_genus0") {
    CHECK(hurwitz_closed_genus0(ones_partition(1)) == 1);
    CHECK(hurwitz_closed_genus0(make_partition({2, 1})) == 4);
    CHECK(hurwitz_closed_genus0(ones_partition(3)) == 24);
    CHECK(hurwitz_closed_genus0(make_partition({2})) == make_rational(1, 2));
}

TEST_CASE("hurwitz_closed_genus1") {
    CHECK(hurwitz_closed_genus1(ones_partition(1)) == 0);
    CHECK(hurwitz_closed_genus1(make_partition({2})) == make_rational(1, 2));
    CHECK(hurwitz_closed_genus1(make_partition({3})) == 9);
    CHECK(hurwitz_closed_genus1(make_partition({2, 1})) == 40);
}

TEST_CASE("hurwitz_from_graph_count") {
    CHECK(hurwitz_from_graph_count(0, ones_partition(1), Rational(1)) == 1);
    CHECK(hurwitz_from_graph_count(1, make_partition({2, 1}), Rational(4)) == 40);
    CHECK(hurwitz_from_graph_count(0, make_partition({2, 1}), Rational(2)) == 4);
    CHECK_THROWS_AS(hurwitz_from_graph_count(2, ones_partition(2), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_closed(2, ones_partition(2)), std::invalid_argument);
}

TEST_CASE("graph counts convert to Hurwitz numbers exactly") {
    for (int d = 1; d <= 10; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            CHECK(hurwitz_from_graph_count(0, alpha, tree_count_genus0(alpha)) == hurwitz_closed_genus0(alpha));
            CHECK(hurwitz_from_graph_count(1, alpha, graph_count_genus1(alpha)) == hurwitz_closed_genus1(alpha));
        }
    }
}

TEST_CASE("c-integrality of closed forms") {
    for (int d = 1; d <= 10; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            for (int g = 0; g <= 1; ++g) {
                HurwitzValue value{g, alpha, hurwitz_closed(g, alpha), Method::Closed};
                CHECK(is_integer(value.c()));
                CHECK(value.c() >= 0);
            }
        }
    }
}

TEST_CASE("identity profile specialization") {
    // G^0_[1^d] = (2d-2)! d^(d-3)
    for (int d = 1; d <= 10; ++d) {
        Rational expected = Rational(factorial(2 * d - 2)) * rational_pow(d, d - 3);
        CHECK(hurwitz_closed_genus0(ones_partition(d)) == expected);
    }
}
