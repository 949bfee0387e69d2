#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hurwitz/closed_form.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/graph_oracle.hpp"
#include "hurwitz/splittings.hpp"

using namespace hurwitz;

TEST_CASE("clump spanning forests") {
    CHECK(enumerate_clump_spanning_forests(ClumpConfig(make_partition({2, 1}))).size() == 1);
    CHECK(enumerate_clump_spanning_forests(ClumpConfig(make_partition({3}))).size() == 3);
    CHECK(enumerate_clump_spanning_forests(ClumpConfig(ones_partition(2))).size() == 1);
    CHECK(enumerate_clump_spanning_forests(ClumpConfig(ones_partition(2)))[0].empty());

    // Cayley per clump: prod alpha_i^(alpha_i - 2) forests, each spanning its clump
    for (int d = 2; d <= 6; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            ClumpConfig cfg(alpha);
            auto forests = enumerate_clump_spanning_forests(cfg);
            BigInt expected(1);
            for (int part : alpha.parts()) {
                if (part >= 2) expected *= int_pow(BigInt(part), part - 2);
            }
            CHECK(BigInt(forests.size()) == expected);
            for (const auto& forest : forests) {
                CHECK(static_cast<int>(forest.size()) == d - alpha.length());
            }
        }
    }
}

TEST_CASE("tree count oracle") {
    CHECK(tree_count_oracle(make_partition({2, 1})) == 2);
    CHECK(tree_count_oracle(ones_partition(2)) == 1);
    CHECK(tree_count_oracle(make_partition({1, 1, 2})) == 8);
}

TEST_CASE("genus 1 oracle frozen values") {
    CHECK(genus1_count_oracle(make_partition({2, 1})) == 4);
    CHECK(genus1_count_oracle(ones_partition(2)) == make_rational(1, 2));
}

TEST_CASE("oracle counts match closed forms") {
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            CHECK(Rational(tree_count_oracle(alpha)) == tree_count_genus0(alpha));
            CHECK(genus1_count_oracle(alpha) == graph_count_genus1(alpha));
        }
    }
}

TEST_CASE("genus 1 census structure") {
    for (int d = 2; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            ClumpConfig cfg(alpha);
            std::set<std::pair<int, int>> allowed_inside;
            for (const auto& clump : cfg.clumps) {
                for (std::size_t i = 0; i < clump.size(); ++i) {
                    for (std::size_t j = i + 1; j < clump.size(); ++j) {
                        allowed_inside.emplace(clump[i], clump[j]);
                    }
                }
            }
            for_each_genus1_graph(alpha, [&](const ClumpMultigraph& g) {
                CHECK(g.connected());
                CHECK(g.genus() == 1);  // exactly one cycle
                CHECK(g.edge_count() == d);
                int marked = 0;
                for (const auto& group : g.groups) {
                    CHECK(group.u < group.v);           // loopless
                    CHECK(group.total <= 2);            // no triple edges
                    CHECK(group.marked <= 1);           // marked edges form forests
                    marked += group.marked;
                    if (group.marked) {
                        CHECK(allowed_inside.count({group.u, group.v}) == 1);
                    }
                }
                CHECK(marked == d - alpha.length());
                Rational w = g.automorphism_weight();
                CHECK((w == 1 || w == make_rational(1, 2)));
            });
        }
    }
}

TEST_CASE("genus 0 census is simple trees") {
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            for_each_genus0_tree(alpha, [&](const ClumpMultigraph& g) {
                CHECK(g.connected());
                CHECK(g.genus() == 0);
                for (const auto& group : g.groups) CHECK(group.total == 1);
                CHECK(g.automorphism_weight() == 1);
            });
        }
    }
}

TEST_CASE("edge deletion identities on oracle censuses") {
    // cache oracle counts for every partition of every d' <= 5
    std::map<Partition, Rational> t0, t1;
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            t0.emplace(alpha, Rational(tree_count_oracle(alpha)));
            t1.emplace(alpha, genus1_count_oracle(alpha));
        }
    }
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            Rational split0(0), split1(0);
            for (const SplitTerm& s : ordered_splittings(alpha)) {
                Rational pieces = Rational(s.multiplicity * BigInt(s.beta.degree()) * s.gamma.degree());
                split0 += pieces * t0.at(s.beta) * t0.at(s.gamma);
                split1 += pieces * t0.at(s.beta) * t1.at(s.gamma);
            }
            // removing an out-of-clump edge from a tree
            CHECK(Rational(2 * (alpha.length() - 1)) * t0.at(alpha) == split0);
            // same removal from a genus 1 graph: stays connected or splits
            CHECK(Rational(2 * alpha.length()) * t1.at(alpha) ==
                  Rational(BigInt(d) * (d - 1)) * t0.at(alpha) + Rational(2) * split1);
        }
    }
}

TEST_CASE("census dump is deterministic and sized correctly") {
    Partition alpha = make_partition({2, 1});
    std::ostringstream first, second;
    write_census(first, alpha, 1);
    write_census(second, alpha, 1);
    CHECK(first.str() == second.str());
    // five genus-1 graphs behind T^1 = 4 (two carry weight 1/2)
    int lines = 0;
    std::istringstream in(first.str());
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 5);
    CHECK(first.str().find("w=1/2") != std::string::npos);
    CHECK_THROWS_AS(write_census(first, alpha, 3), std::invalid_argument);
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(tree_count_oracle(ones_partition(8)), BudgetExceededError);
    CHECK_THROWS_AS(genus1_count_oracle(ones_partition(8)), BudgetExceededError);
    CHECK(tree_count_oracle(ones_partition(8), 8) == int_pow(BigInt(8), 6));
}
