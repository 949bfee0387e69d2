#include "hurwitz/splittings.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace hurwitz {

namespace {

// Distinct part values with multiplicities, descending by value.
std::vector<std::pair<int, int>> value_multiplicities(const std::vector<int>& parts) {
    std::vector<std::pair<int, int>> out;
    for (int p : parts) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

// Walks every sub-multiset of the given multiset, reporting the chosen part
// list and the number of labelled ways ( prod_i C(m_i, k_i) ) to realize it.
void for_each_submultiset(const std::vector<std::pair<int, int>>& values,
                          const std::function<void(const std::vector<int>&, const BigInt&)>& fn) {
    std::vector<int> chosen;
    std::function<void(std::size_t, BigInt)> descend = [&](std::size_t idx, BigInt ways) {
        if (idx == values.size()) {
            fn(chosen, ways);
            return;
        }
        auto [value, mult] = values[idx];
        for (int take = 0; take <= mult; ++take) {
            if (take > 0) chosen.push_back(value);
            descend(idx + 1, ways * binomial(mult, take));
        }
        chosen.erase(chosen.end() - mult, chosen.end());
    };
    descend(0, BigInt(1));
}

}  // namespace

std::vector<SplitTerm> ordered_splittings(const Partition& alpha) {
    std::vector<SplitTerm> terms;
    if (alpha.length() < 2) return terms;
    auto values = value_multiplicities(alpha.parts());
    for_each_submultiset(values, [&](const std::vector<int>& beta_parts, const BigInt& ways) {
        if (beta_parts.empty() || static_cast<int>(beta_parts.size()) == alpha.length()) return;
        std::vector<int> gamma_parts = alpha.parts();
        for (int p : beta_parts) {
            gamma_parts.erase(std::find(gamma_parts.begin(), gamma_parts.end(), p));
        }
        terms.push_back(SplitTerm{Partition(beta_parts), Partition(std::move(gamma_parts)), ways});
    });
    std::sort(terms.begin(), terms.end(), [](const SplitTerm& a, const SplitTerm& b) {
        return a.beta.parts() < b.beta.parts();
    });
    return terms;
}

std::vector<PartSplitTerm> part_splittings(const Partition& alpha) {
    std::vector<PartSplitTerm> terms;
    auto values = value_multiplicities(alpha.parts());
    for (auto [value, mult] : values) {
        if (value < 2) continue;
        std::vector<int> rest = alpha.without_one(value);
        auto rest_values = value_multiplicities(rest);
        for (int p = 1; p < value; ++p) {
            int q = value - p;
            for_each_submultiset(rest_values, [&](const std::vector<int>& to_beta, const BigInt& ways) {
                std::vector<int> beta_parts = to_beta;
                beta_parts.push_back(p);
                std::vector<int> gamma_parts = rest;
                for (int taken : to_beta) {
                    gamma_parts.erase(std::find(gamma_parts.begin(), gamma_parts.end(), taken));
                }
                gamma_parts.push_back(q);
                terms.push_back(PartSplitTerm{value, p, q, Partition(std::move(beta_parts)),
                                              Partition(std::move(gamma_parts)), BigInt(mult) * ways});
            });
        }
    }
    return terms;
}

}  // namespace hurwitz
