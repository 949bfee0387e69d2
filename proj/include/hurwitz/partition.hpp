#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Cycle type / ramification profile over infinity: positive parts stored in
// canonical non-increasing order.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }                        // d
    int length() const { return static_cast<int>(parts_.size()); }  // l(alpha)
    int multiplicity(int value) const;                            // z_alpha(value)

    // Multiset edits; results are re-canonicalized. without_one keeps the
    // remainder as a raw part list since it may be empty.
    std::vector<int> without_one(int value) const;
    Partition replace_part(int value, int p, int q) const;  // alpha' of the boundary recursion

    std::string to_string() const;  // "3,2,1"
    static Partition from_string(const std::string& text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int degree_;
};

Partition make_partition(const std::vector<int>& parts);

// All partitions of d in reverse-lexicographic order: (d) first, (1^d) last.
std::vector<Partition> partitions_of(int d);

Partition ones_partition(int d);  // [1^d]

// d + l(alpha) + 2g - 2, the forced number of simple branch points.
int r_value(int genus, const Partition& alpha);

// e_j of the parts; e_0 = 1, e_j = 0 for j > l(alpha).
BigInt elementary_symmetric(const Partition& alpha, int j);

// h_alpha = d! / (prod alpha_i * prod_i z_alpha(i)!).
BigInt conjugacy_class_size(const Partition& alpha);

BigInt parts_product(const Partition& alpha);            // prod alpha_i
BigInt parts_factorial_product(const Partition& alpha);  // prod (alpha_i - 1)!

}  // namespace hurwitz
