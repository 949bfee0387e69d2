#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Partition: empty part list");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> Partition::without_one(int value) const {
    std::vector<int> rest = parts_;
    auto it = std::find(rest.begin(), rest.end(), value);
    if (it == rest.end()) throw std::invalid_argument("without_one: value not a part");
    rest.erase(it);
    return rest;
}

Partition Partition::replace_part(int value, int p, int q) const {
    if (p + q != value) throw std::invalid_argument("replace_part: p + q != value");
    std::vector<int> next = without_one(value);
    next.push_back(p);
    next.push_back(q);
    return Partition(std::move(next));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::from_string(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: bad part '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("Partition: bad part '" + token + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

Partition make_partition(const std::vector<int>& parts) {
    return Partition(parts);
}

std::vector<Partition> partitions_of(int d) {
    if (d < 1) throw std::invalid_argument("partitions_of: d must be >= 1");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> descend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            current.push_back(p);
            descend(remaining - p, p);
            current.pop_back();
        }
    };
    descend(d, d);
    return out;
}

Partition ones_partition(int d) {
    return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

int r_value(int genus, const Partition& alpha) {
    if (genus < 0) throw std::invalid_argument("r_value: genus must be >= 0");
    return alpha.degree() + alpha.length() + 2 * genus - 2;
}

BigInt elementary_symmetric(const Partition& alpha, int j) {
    if (j < 0) throw std::invalid_argument("elementary_symmetric: j must be >= 0");
    if (j > alpha.length()) return BigInt(0);
    // e[k] after processing a prefix of the parts
    std::vector<BigInt> e(static_cast<std::size_t>(j) + 1, BigInt(0));
    e[0] = 1;
    for (int part : alpha.parts()) {
        for (int k = std::min<int>(j, alpha.length()); k >= 1; --k) {
            e[static_cast<std::size_t>(k)] += part * e[static_cast<std::size_t>(k) - 1];
        }
    }
    return e[static_cast<std::size_t>(j)];
}

BigInt conjugacy_class_size(const Partition& alpha) {
    BigInt denom = parts_product(alpha);
    int previous = 0;
    for (int part : alpha.parts()) {
        if (part != previous) {
            denom *= factorial(alpha.multiplicity(part));
            previous = part;
        }
    }
    BigInt h = factorial(alpha.degree());
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), denom.get_mpz_t());
    return h;
}

BigInt parts_product(const Partition& alpha) {
    BigInt prod(1);
    for (int part : alpha.parts()) prod *= part;
    return prod;
}

BigInt parts_factorial_product(const Partition& alpha) {
    BigInt prod(1);
    for (int part : alpha.parts()) prod *= factorial(part - 1);
    return prod;
}

}  // namespace hurwitz
