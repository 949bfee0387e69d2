#pragma once

#include <string>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Method { Closed, Recursion, DfsOracle, SieveOracle, GraphOracle };

std::string method_name(Method m);

// A computed Hurwitz number together with how it was obtained.
// value * prod(alpha_i) is the transposition-factorization count c^g_alpha.
struct HurwitzValue {
    int genus;
    Partition alpha;
    Rational value;
    Method method;

    Rational c() const { return value * Rational(parts_product(alpha)); }
};

// T^0_alpha = d^(l-2) * prod alpha_i^(alpha_i - 1): trees on d clumped
// vertices whose restriction to each clump is a spanning tree.
Rational tree_count_genus0(const Partition& alpha);

// T^1_alpha = (T^0_alpha / 2) (d^2 - d - sum_{j>=2} d^(2-j) (j-2)! e_j).
Rational graph_count_genus1(const Partition& alpha);

// G^0_alpha = r^0! d^(l-3) prod alpha_i^(alpha_i-1) / prod (alpha_i-1)!.
Rational hurwitz_closed_genus0(const Partition& alpha);

// G^1_alpha = r^1! d^(l-2) prod alpha_i^(alpha_i-1) / (24 prod (alpha_i-1)!)
//             * (d^2 - d - sum_{j>=2} d^(2-j) (j-2)! e_j).
Rational hurwitz_closed_genus1(const Partition& alpha);

Rational hurwitz_closed(int genus, const Partition& alpha);

// Scales a graph count T^g into the Hurwitz number G^g:
//   genus 0: r^0! t / (d prod (alpha_i-1)!)
//   genus 1: r^1! t / (12 prod (alpha_i-1)!)
Rational hurwitz_from_graph_count(int genus, const Partition& alpha, const Rational& t);

}  // namespace hurwitz
