#pragma once

#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// One ordered split alpha = beta ⊔ gamma of the labelled parts, collapsed to
// canonical partitions. multiplicity = prod_i C(z_alpha(i), z_beta(i)) counts
// the labelled-part choices realizing this content split.
struct SplitTerm {
    Partition beta;
    Partition gamma;
    BigInt multiplicity;
};

// One way of cutting a part alpha_k into p + q and distributing the remaining
// parts between the two sides, with p in beta and q in gamma. multiplicity
// folds in z_alpha(alpha_k) and the labelled distribution count.
struct PartSplitTerm {
    int part_value;  // alpha_k
    int p;
    int q;
    Partition beta;   // contains p
    Partition gamma;  // contains q
    BigInt multiplicity;
};

// Every ordered pair of nonempty sub-multisets (beta, gamma) with
// beta ⊎ gamma = alpha, sorted lexicographically on beta. Total multiplicity
// is 2^l(alpha) - 2. Empty when l(alpha) = 1.
std::vector<SplitTerm> ordered_splittings(const Partition& alpha);

// Every (part value >= 2, ordered p + q, ordered distribution of the other
// parts). Empty when all parts equal 1.
std::vector<PartSplitTerm> part_splittings(const Partition& alpha);

}  // namespace hurwitz
