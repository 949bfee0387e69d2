#include "hurwitz/graph_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

namespace {

void check_cap(const Partition& alpha, int cap) {
    if (alpha.degree() > cap) {
        throw BudgetExceededError("graph oracle: d=" + std::to_string(alpha.degree()) +
                                      " exceeds the vertex cap of " + std::to_string(cap),
                                  static_cast<std::uint64_t>(cap));
    }
}

// Labelled trees on m local vertices via Pruefer sequences, lexicographic.
std::vector<EdgeList> labelled_trees(int m) {
    if (m == 1) return {EdgeList{}};
    if (m == 2) return {EdgeList{{0, 1}}};
    std::vector<EdgeList> trees;
    std::vector<int> seq(static_cast<std::size_t>(m - 2), 0);
    while (true) {
        // decode
        std::vector<int> degree(static_cast<std::size_t>(m), 1);
        for (int s : seq) ++degree[static_cast<std::size_t>(s)];
        EdgeList edges;
        std::vector<int> deg = degree;
        for (int s : seq) {
            for (int leaf = 0; leaf < m; ++leaf) {
                if (deg[static_cast<std::size_t>(leaf)] == 1) {
                    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
                    --deg[static_cast<std::size_t>(leaf)];
                    --deg[static_cast<std::size_t>(s)];
                    break;
                }
            }
        }
        int first = -1;
        for (int v = 0; v < m; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 1) {
                if (first < 0) {
                    first = v;
                } else {
                    edges.emplace_back(first, v);
                }
            }
        }
        trees.push_back(std::move(edges));
        // next sequence
        int at = m - 3;
        while (at >= 0 && seq[static_cast<std::size_t>(at)] == m - 1) {
            seq[static_cast<std::size_t>(at)] = 0;
            --at;
        }
        if (at < 0) break;
        ++seq[static_cast<std::size_t>(at)];
    }
    return trees;
}

bool connected_on(int vertices, const std::vector<std::pair<int, int>>& distinct_edges) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = vertices;
    for (auto [u, v] : distinct_edges) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

ClumpMultigraph assemble(int vertices, const EdgeList& marked,
                         const std::vector<std::pair<int, int>>& unmarked) {
    std::map<std::pair<int, int>, std::pair<int, int>> groups;  // pair -> (total, marked)
    for (auto e : marked) {
        auto& g = groups[e];
        ++g.first;
        ++g.second;
    }
    for (auto e : unmarked) ++groups[e].first;
    ClumpMultigraph graph;
    graph.vertices = vertices;
    for (const auto& [pair, counts] : groups) {
        graph.groups.push_back({pair.first, pair.second, counts.first, counts.second});
    }
    return graph;
}

}  // namespace

ClumpConfig::ClumpConfig(const Partition& alpha_in) : alpha(alpha_in) {
    int base = 0;
    for (int size : alpha.parts()) {
        std::vector<int> clump(static_cast<std::size_t>(size));
        std::iota(clump.begin(), clump.end(), base);
        clumps.push_back(std::move(clump));
        base += size;
    }
}

int ClumpMultigraph::edge_count() const {
    int total = 0;
    for (const auto& g : groups) total += g.total;
    return total;
}

bool ClumpMultigraph::connected() const {
    std::vector<std::pair<int, int>> distinct;
    distinct.reserve(groups.size());
    for (const auto& g : groups) distinct.emplace_back(g.u, g.v);
    return connected_on(vertices, distinct);
}

Rational ClumpMultigraph::automorphism_weight() const {
    Rational weight(1);
    for (const auto& g : groups) {
        if (g.total == 2 && g.marked == 0) weight /= 2;
    }
    return weight;
}

std::string ClumpMultigraph::census_line() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& g : groups) {
        for (int copy = 0; copy < g.total; ++copy) {
            if (!first) out << ' ';
            first = false;
            out << g.u << '-' << g.v;
            if (copy < g.marked) out << '*';
        }
    }
    out << "  w=" << to_string(automorphism_weight());
    return out.str();
}

std::vector<EdgeList> enumerate_clump_spanning_forests(const ClumpConfig& cfg) {
    std::vector<std::vector<EdgeList>> per_clump;
    for (const auto& clump : cfg.clumps) {
        std::vector<EdgeList> local = labelled_trees(static_cast<int>(clump.size()));
        for (auto& tree : local) {
            for (auto& [u, v] : tree) {
                u = clump[static_cast<std::size_t>(u)];
                v = clump[static_cast<std::size_t>(v)];
            }
        }
        per_clump.push_back(std::move(local));
    }

    std::vector<EdgeList> forests;
    std::vector<std::size_t> pick(per_clump.size(), 0);
    while (true) {
        EdgeList forest;
        for (std::size_t k = 0; k < per_clump.size(); ++k) {
            const EdgeList& tree = per_clump[k][pick[k]];
            forest.insert(forest.end(), tree.begin(), tree.end());
        }
        std::sort(forest.begin(), forest.end());
        forests.push_back(std::move(forest));

        std::size_t at = per_clump.size();
        while (at > 0 && pick[at - 1] + 1 == per_clump[at - 1].size()) {
            pick[at - 1] = 0;
            --at;
        }
        if (at == 0) break;
        ++pick[at - 1];
    }
    return forests;
}

void for_each_genus0_tree(const Partition& alpha,
                          const std::function<void(const ClumpMultigraph&)>& fn, int cap) {
    check_cap(alpha, cap);
    const int d = alpha.degree();
    const auto pairs = all_transpositions(d);
    const int extra = alpha.length() - 1;
    ClumpConfig cfg(alpha);

    for (const EdgeList& forest : enumerate_clump_spanning_forests(cfg)) {
        // choose `extra` distinct unmarked pairs
        std::vector<int> pick(static_cast<std::size_t>(extra));
        std::iota(pick.begin(), pick.end(), 0);
        if (extra > static_cast<int>(pairs.size())) return;
        while (true) {
            std::vector<std::pair<int, int>> unmarked;
            unmarked.reserve(static_cast<std::size_t>(extra));
            for (int idx : pick) unmarked.push_back(pairs[static_cast<std::size_t>(idx)]);
            ClumpMultigraph graph = assemble(d, forest, unmarked);
            // d - 1 edge slots: connected forces a simple tree
            if (static_cast<int>(graph.groups.size()) == d - 1 && graph.connected()) fn(graph);

            if (extra == 0) break;
            int at = extra - 1;
            while (at >= 0 && pick[static_cast<std::size_t>(at)] ==
                                  static_cast<int>(pairs.size()) - extra + at) {
                --at;
            }
            if (at < 0) break;
            ++pick[static_cast<std::size_t>(at)];
            for (int k = at + 1; k < extra; ++k) {
                pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k) - 1] + 1;
            }
        }
    }
}

void for_each_genus1_graph(const Partition& alpha,
                           const std::function<void(const ClumpMultigraph&)>& fn, int cap) {
    check_cap(alpha, cap);
    const int d = alpha.degree();
    const auto pairs = all_transpositions(d);
    const int extra = alpha.length();
    ClumpConfig cfg(alpha);

    for (const EdgeList& forest : enumerate_clump_spanning_forests(cfg)) {
        std::map<std::pair<int, int>, int> marked_mult;
        for (auto e : forest) ++marked_mult[e];

        // multisets of `extra` pairs, per-pair total multiplicity <= 2
        std::vector<std::pair<int, int>> unmarked;
        std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int left) {
            if (left == 0) {
                ClumpMultigraph graph = assemble(d, forest, unmarked);
                if (graph.connected()) fn(graph);
                return;
            }
            if (idx == pairs.size()) return;
            const auto pair = pairs[idx];
            auto it = marked_mult.find(pair);
            const int room = 2 - (it == marked_mult.end() ? 0 : it->second);
            for (int take = 0; take <= std::min(room, left); ++take) {
                for (int copy = 0; copy < take; ++copy) unmarked.push_back(pair);
                choose(idx + 1, left - take);
                for (int copy = 0; copy < take; ++copy) unmarked.pop_back();
            }
        };
        choose(0, extra);
    }
}

BigInt tree_count_oracle(const Partition& alpha, int cap) {
    BigInt count(0);
    for_each_genus0_tree(alpha, [&](const ClumpMultigraph&) { ++count; }, cap);
    return count;
}

Rational genus1_count_oracle(const Partition& alpha, int cap) {
    Rational total(0);
    for_each_genus1_graph(alpha, [&](const ClumpMultigraph& g) { total += g.automorphism_weight(); },
                          cap);
    return total;
}

void write_census(std::ostream& out, const Partition& alpha, int genus, int cap) {
    auto emit = [&out](const ClumpMultigraph& g) { out << g.census_line() << '\n'; };
    if (genus == 0) {
        for_each_genus0_tree(alpha, emit, cap);
    } else if (genus == 1) {
        for_each_genus1_graph(alpha, emit, cap);
    } else {
        throw std::invalid_argument("write_census: unsupported genus " + std::to_string(genus));
    }
}

}  // namespace hurwitz
