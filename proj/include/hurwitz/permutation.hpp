#pragma once

#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Bijection on {0, ..., d-1} stored as an image table.
struct Perm {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    static Perm identity(int d);

    // Fixed class representative: cycles laid out consecutively on
    // {0, ..., d-1}, longest first. canonical_of_type((2,1)) = (0 1)(2).
    static Perm canonical_of_type(const Partition& alpha);

    Partition cycle_type() const;
    bool is_bijection() const;

    bool operator==(const Perm&) const = default;
};

// All (a, b) with a < b < d, lexicographically.
std::vector<std::pair<int, int>> all_transpositions(int d);

}  // namespace hurwitz
