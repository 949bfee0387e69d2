#include "hurwitz/permutation.hpp"

#include <numeric>

namespace hurwitz {

Perm Perm::identity(int d) {
    Perm p;
    p.images.resize(static_cast<std::size_t>(d));
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Perm Perm::canonical_of_type(const Partition& alpha) {
    Perm p = identity(alpha.degree());
    int base = 0;
    for (int len : alpha.parts()) {
        for (int i = 0; i < len; ++i) {
            p.images[static_cast<std::size_t>(base + i)] = base + (i + 1) % len;
        }
        base += len;
    }
    return p;
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(images.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        std::size_t at = start;
        while (!seen[at]) {
            seen[at] = true;
            at = static_cast<std::size_t>(images[at]);
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

bool Perm::is_bijection() const {
    std::vector<bool> hit(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::vector<std::pair<int, int>> all_transpositions(int d) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) out.emplace_back(a, b);
    }
    return out;
}

}  // namespace hurwitz
