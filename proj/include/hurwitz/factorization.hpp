#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

inline constexpr std::uint64_t kDefaultDfsBudget = 100'000'000;

// Ground truth by direct search: the number of ordered r-tuples of
// transpositions multiplying to the canonical permutation of type alpha whose
// members connect all d points. Enumerates every tuple (lexicographic
// transposition order, no lookahead pruning); refuses to start when the leaf
// count (d(d-1)/2)^r exceeds the budget.
BigInt transitive_factorization_count_dfs(const Partition& alpha, int r,
                                          std::uint64_t budget = kDefaultDfsBudget);

// Class-algebra state of the cut-join dynamic program:
// coeffs[lambda] = number of ordered `steps`-tuples of transpositions in S_d
// whose product has cycle type lambda. Total mass is (d(d-1)/2)^steps.
struct ClassVector {
    int d = 0;
    int steps = 0;
    std::map<Partition, BigInt> coeffs;

    static ClassVector identity_start(int d);
    BigInt total_mass() const;
};

// Right-multiplication by the transposition class: two cycles join, or one
// cycle cuts into two.
ClassVector cut_join_step(const ClassVector& v);

// F(sigma, r): ordered factorizations of a fixed permutation of type alpha
// into r transpositions, transitive or not. Equals coeffs[alpha] / h_alpha.
BigInt total_factorization_count(const Partition& alpha, int r);

// Inverts the block-decomposition identity
//   F(alpha, r) = sum over set partitions {B_i} of the parts of alpha,
//                 sum over r_1 + ... + r_k = r of
//                 multinomial(r; r_1..r_k) * prod_i c(beta_i, r_i)
// to recover the transitive counts c(alpha, r). Reusable across calls: both
// the cut-join tables (per degree) and the connected counts are memoized.
class FactorizationSieve {
public:
    BigInt total_count(const Partition& alpha, int r);      // F(alpha, r)
    BigInt connected_count(const Partition& alpha, int r);  // c(alpha, r)

private:
    const ClassVector& stepped(int d, int r);

    std::map<int, std::vector<ClassVector>> class_vectors_;
    std::map<std::pair<Partition, int>, BigInt> connected_;
};

// One-shot convenience around FactorizationSieve.
BigInt connected_sieve(const Partition& alpha, int r);

enum class OracleMethod { Dfs, Sieve };

// G^g_alpha = c^g_alpha / prod alpha_i with c from the chosen oracle.
Rational hurwitz_from_factorizations(int genus, const Partition& alpha, OracleMethod method,
                                     std::uint64_t budget = kDefaultDfsBudget);

}  // namespace hurwitz
