#include "hurwitz/closed_form.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

// d^2 - d - sum_{j=2}^{l} d^(2-j) (j-2)! e_j, the genus-1 correction factor.
Rational genus1_correction(const Partition& alpha) {
    const long d = alpha.degree();
    Rational out(BigInt(d) * d - d);
    for (int j = 2; j <= alpha.length(); ++j) {
        out -= rational_pow(d, 2 - j) * Rational(factorial(j - 2) * elementary_symmetric(alpha, j));
    }
    return out;
}

BigInt parts_power_product(const Partition& alpha) {
    BigInt prod(1);
    for (int part : alpha.parts()) prod *= int_pow(BigInt(part), part - 1);
    return prod;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Closed: return "closed";
        case Method::Recursion: return "recursion";
        case Method::DfsOracle: return "dfs";
        case Method::SieveOracle: return "sieve";
        case Method::GraphOracle: return "graph";
    }
    return "?";
}

Rational tree_count_genus0(const Partition& alpha) {
    return rational_pow(alpha.degree(), alpha.length() - 2) * Rational(parts_power_product(alpha));
}

Rational graph_count_genus1(const Partition& alpha) {
    return tree_count_genus0(alpha) / 2 * genus1_correction(alpha);
}

Rational hurwitz_closed_genus0(const Partition& alpha) {
    return Rational(factorial(r_value(0, alpha))) * rational_pow(alpha.degree(), alpha.length() - 3) *
           make_rational(parts_power_product(alpha), parts_factorial_product(alpha));
}

Rational hurwitz_closed_genus1(const Partition& alpha) {
    return Rational(factorial(r_value(1, alpha))) * rational_pow(alpha.degree(), alpha.length() - 2) *
           make_rational(parts_power_product(alpha), 24 * parts_factorial_product(alpha)) *
           genus1_correction(alpha);
}

Rational hurwitz_closed(int genus, const Partition& alpha) {
    if (genus == 0) return hurwitz_closed_genus0(alpha);
    if (genus == 1) return hurwitz_closed_genus1(alpha);
    throw std::invalid_argument("hurwitz_closed: no closed form for genus " + std::to_string(genus));
}

Rational hurwitz_from_graph_count(int genus, const Partition& alpha, const Rational& t) {
    if (genus == 0) {
        return Rational(factorial(r_value(0, alpha))) * t /
               Rational(alpha.degree() * parts_factorial_product(alpha));
    }
    if (genus == 1) {
        return Rational(factorial(r_value(1, alpha))) * t /
               Rational(12 * parts_factorial_product(alpha));
    }
    throw std::invalid_argument("hurwitz_from_graph_count: unsupported genus " + std::to_string(genus));
}

}  // namespace hurwitz
