#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/table.hpp"

namespace hurwitz {

// Memoized boundary-divisor recursion for G^0 and G^1. Splitting sums run
// over ordered (beta, gamma) pairs; the printed coefficients already absorb
// the unordered-components factor of 1/2. Genus-1 evaluation pulls its
// genus-0 inputs through the same table.
Rational hurwitz_recursive(int genus, const Partition& alpha, HurwitzTable& table);

// Conjectured genus-2 recursion for alpha = [1^d]. The printed relation holds
// for the per-cover counts G^g_[1^j] / j!; this evaluates it in that
// normalization and returns (and memoizes) G^2_[1^d] itself.
Rational genus2_conjecture(int d, HurwitzTable& table);

}  // namespace hurwitz
