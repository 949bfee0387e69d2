#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

inline constexpr int kDefaultGraphOracleCap = 7;

// d labelled vertices grouped into clumps whose sizes form alpha; clump k
// occupies a consecutive block of vertex ids, parts in canonical order.
struct ClumpConfig {
    explicit ClumpConfig(const Partition& alpha);

    Partition alpha;
    std::vector<std::vector<int>> clumps;

    int vertex_count() const { return alpha.degree(); }
};

using EdgeList = std::vector<std::pair<int, int>>;  // pairs with u < v

// Loopless multigraph on labelled vertices with per-pair total and marked
// multiplicities. Genus means E - V + 1 with E counted with multiplicity.
struct ClumpMultigraph {
    struct EdgeGroup {
        int u, v;
        int total;
        int marked;
        auto operator<=>(const EdgeGroup&) const = default;
    };

    int vertices = 0;
    std::vector<EdgeGroup> groups;  // sorted by (u, v)

    int edge_count() const;
    int genus() const { return edge_count() - vertices + 1; }
    bool connected() const;

    // 1 / |Aut| with vertices fixed and the marked set preserved setwise:
    // each doubled pair with both copies unmarked halves the weight.
    Rational automorphism_weight() const;

    std::string census_line() const;  // "0-1* 0-2 0-2  w=1/2"
};

// All choices of a labelled spanning tree inside each clump; the marked
// edges. Count is prod alpha_i^(alpha_i - 2).
std::vector<EdgeList> enumerate_clump_spanning_forests(const ClumpConfig& cfg);

// Genus-0 census: trees on d vertices containing a clump-spanning forest as
// marked edges. Genus-1 census: connected loopless multigraphs with E = d,
// max pair multiplicity 2, same marked forests. Deterministic order.
void for_each_genus0_tree(const Partition& alpha,
                          const std::function<void(const ClumpMultigraph&)>& fn,
                          int cap = kDefaultGraphOracleCap);
void for_each_genus1_graph(const Partition& alpha,
                           const std::function<void(const ClumpMultigraph&)>& fn,
                           int cap = kDefaultGraphOracleCap);

BigInt tree_count_oracle(const Partition& alpha, int cap = kDefaultGraphOracleCap);
Rational genus1_count_oracle(const Partition& alpha, int cap = kDefaultGraphOracleCap);

// One census_line per enumerated graph, for debugging and documentation.
void write_census(std::ostream& out, const Partition& alpha, int genus,
                  int cap = kDefaultGraphOracleCap);

}  // namespace hurwitz
