#include "hurwitz/factorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

namespace {

// Union-find with an undo log; no path compression so undo stays exact.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1), components_(n) {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            log_.push_back({-1, -1});
            return;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        --components_;
        log_.push_back({b, a});
    }

    void undo() {
        auto [child, root] = log_.back();
        log_.pop_back();
        if (child < 0) return;
        parent_[static_cast<std::size_t>(child)] = child;
        size_[static_cast<std::size_t>(root)] -= size_[static_cast<std::size_t>(child)];
        ++components_;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
    std::vector<std::pair<int, int>> log_;
};

std::vector<int> multiset_minus(std::vector<int> parts, const std::vector<int>& remove) {
    for (int value : remove) {
        parts.erase(std::find(parts.begin(), parts.end(), value));
    }
    return parts;
}

}  // namespace

BigInt transitive_factorization_count_dfs(const Partition& alpha, int r, std::uint64_t budget) {
    if (r < 0) throw std::invalid_argument("transitive_factorization_count_dfs: r must be >= 0");
    const int d = alpha.degree();
    const auto transpositions = all_transpositions(d);

    BigInt leaves = int_pow(BigInt(transpositions.size()), r);
    if (leaves > BigInt(budget)) {
        throw BudgetExceededError("transitive_factorization_count_dfs: " + std::to_string(d * (d - 1) / 2) +
                                      "^" + std::to_string(r) + " leaf visits exceed the cap of " +
                                      std::to_string(budget),
                                  budget);
    }

    const Perm target = Perm::canonical_of_type(alpha);
    std::vector<int> product = Perm::identity(d).images;
    RollbackDsu dsu(d);
    std::uint64_t count = 0;

    std::function<void(int)> descend = [&](int depth) {
        if (depth == r) {
            if (dsu.components() == 1 && product == target.images) ++count;
            return;
        }
        for (auto [a, b] : transpositions) {
            std::swap(product[static_cast<std::size_t>(a)], product[static_cast<std::size_t>(b)]);
            dsu.unite(a, b);
            descend(depth + 1);
            dsu.undo();
            std::swap(product[static_cast<std::size_t>(a)], product[static_cast<std::size_t>(b)]);
        }
    };
    descend(0);
    return BigInt(static_cast<unsigned long>(count));
}

ClassVector ClassVector::identity_start(int d) {
    if (d < 1) throw std::invalid_argument("ClassVector: d must be >= 1");
    ClassVector v;
    v.d = d;
    v.steps = 0;
    v.coeffs.emplace(ones_partition(d), BigInt(1));
    return v;
}

BigInt ClassVector::total_mass() const {
    BigInt mass(0);
    for (const auto& [type, weight] : coeffs) mass += weight;
    return mass;
}

ClassVector cut_join_step(const ClassVector& v) {
    ClassVector next;
    next.d = v.d;
    next.steps = v.steps + 1;
    auto contribute = [&next](std::vector<int> parts, const BigInt& weight) {
        next.coeffs[Partition(std::move(parts))] += weight;
    };

    for (const auto& [type, weight] : v.coeffs) {
        if (weight == 0) continue;
        const auto& parts = type.parts();
        std::vector<std::pair<int, int>> values;  // (value, multiplicity), descending
        for (int p : parts) {
            if (!values.empty() && values.back().first == p) {
                ++values.back().second;
            } else {
                values.emplace_back(p, 1);
            }
        }

        // joins across distinct cycle lengths
        for (std::size_t x = 0; x < values.size(); ++x) {
            auto [a, za] = values[x];
            for (std::size_t y = x + 1; y < values.size(); ++y) {
                auto [b, zb] = values[y];
                std::vector<int> joined = multiset_minus(parts, {a, b});
                joined.push_back(a + b);
                contribute(std::move(joined), weight * za * zb * a * b);
            }
            // joins of two equal-length cycles
            if (za >= 2) {
                std::vector<int> joined = multiset_minus(parts, {a, a});
                joined.push_back(2 * a);
                contribute(std::move(joined), weight * binomial(za, 2) * a * a);
            }
            // cuts of one cycle into {c - k, k}
            if (a >= 2) {
                for (int k = 1; 2 * k <= a; ++k) {
                    std::vector<int> cut = multiset_minus(parts, {a});
                    cut.push_back(k);
                    cut.push_back(a - k);
                    BigInt ways = (2 * k == a) ? BigInt(za) * (a / 2) : BigInt(za * a);
                    contribute(std::move(cut), weight * ways);
                }
            }
        }
    }
    return next;
}

BigInt total_factorization_count(const Partition& alpha, int r) {
    FactorizationSieve sieve;
    return sieve.total_count(alpha, r);
}

const ClassVector& FactorizationSieve::stepped(int d, int r) {
    auto& chain = class_vectors_[d];
    if (chain.empty()) chain.push_back(ClassVector::identity_start(d));
    while (static_cast<int>(chain.size()) <= r) chain.push_back(cut_join_step(chain.back()));
    return chain[static_cast<std::size_t>(r)];
}

BigInt FactorizationSieve::total_count(const Partition& alpha, int r) {
    if (r < 0) throw std::invalid_argument("total_count: r must be >= 0");
    const ClassVector& v = stepped(alpha.degree(), r);
    auto it = v.coeffs.find(alpha);
    if (it == v.coeffs.end()) return BigInt(0);
    BigInt h = conjugacy_class_size(alpha);
    BigInt quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), it->second.get_mpz_t(), h.get_mpz_t());
    if (remainder != 0) {
        throw InternalConsistencyError("total_count: class-vector entry for " + alpha.to_string() +
                                       " not divisible by h");
    }
    return quotient;
}

BigInt FactorizationSieve::connected_count(const Partition& alpha, int r) {
    if (r < 0) throw std::invalid_argument("connected_count: r must be >= 0");
    auto key = std::make_pair(alpha, r);
    if (auto it = connected_.find(key); it != connected_.end()) return it->second;

    BigInt result = total_count(alpha, r);

    // Peel off the block containing one distinguished occurrence of the
    // largest part; every proper block choice is subtracted.
    const int anchor = alpha.parts().front();
    std::vector<std::pair<int, int>> values;
    for (int p : alpha.parts()) {
        if (!values.empty() && values.back().first == p) {
            ++values.back().second;
        } else {
            values.emplace_back(p, 1);
        }
    }

    std::vector<int> beta_parts;
    std::function<void(std::size_t, BigInt)> choose = [&](std::size_t idx, BigInt ways) {
        if (idx == values.size()) {
            if (static_cast<int>(beta_parts.size()) == alpha.length()) return;  // block = whole thing
            Partition beta(beta_parts);
            Partition gamma(multiset_minus(alpha.parts(), beta_parts));
            for (int r1 = 0; r1 <= r; ++r1) {
                BigInt rest = total_count(gamma, r - r1);
                if (rest == 0) continue;
                BigInt inner = connected_count(beta, r1);
                if (inner == 0) continue;
                result -= ways * binomial(r, r1) * inner * rest;
            }
            return;
        }
        auto [value, mult] = values[idx];
        // the distinguished copy of the anchor value is always in beta
        const int lower = (value == anchor) ? 1 : 0;
        for (int take = lower; take <= mult; ++take) {
            for (int copy = 0; copy < take; ++copy) beta_parts.push_back(value);
            choose(idx + 1, ways * binomial(mult - lower, take - lower));
            for (int copy = 0; copy < take; ++copy) beta_parts.pop_back();
        }
    };
    choose(0, BigInt(1));

    if (result < 0) {
        throw InternalConsistencyError("connected_count: negative count for " + alpha.to_string() +
                                       ", r=" + std::to_string(r));
    }
    connected_.emplace(key, result);
    return result;
}

BigInt connected_sieve(const Partition& alpha, int r) {
    FactorizationSieve sieve;
    return sieve.connected_count(alpha, r);
}

Rational hurwitz_from_factorizations(int genus, const Partition& alpha, OracleMethod method,
                                     std::uint64_t budget) {
    if (genus < 0) throw std::invalid_argument("hurwitz_from_factorizations: genus must be >= 0");
    const int r = r_value(genus, alpha);
    if (r < 0) throw std::invalid_argument("hurwitz_from_factorizations: r^g_alpha is negative");
    BigInt c = method == OracleMethod::Dfs ? transitive_factorization_count_dfs(alpha, r, budget)
                                           : connected_sieve(alpha, r);
    return make_rational(c, parts_product(alpha));
}

}  // namespace hurwitz
