#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// z^a u^b prod_i v_i^(m_i); trailing zero v-exponents are trimmed so equal
// monomials compare equal regardless of how they were built.
struct Monomial {
    int z = 0;
    int u = 0;
    std::vector<int> v;

    void trim();
    int v_exponent(int index) const;  // 1-based variable index
    std::string to_string() const;    // "z^2 u v2"

    auto operator<=>(const Monomial&) const = default;
};

// Variable designator for partial derivatives.
struct Var {
    enum class Kind { Z, U, V };
    Kind kind;
    int index = 0;  // v_index, 1-based

    static Var z() { return {Kind::Z, 0}; }
    static Var u() { return {Kind::U, 0}; }
    static Var v(int index) { return {Kind::V, index}; }
};

// Formal power series in z, u, v_1..v_D with exact coefficients, truncated at
// total z-degree D. The v-alphabet stops at D: under the truncation no v_i
// with i > D can occur in a potential.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation);

    int truncation() const { return truncation_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    void add_term(Monomial m, const Rational& coeff);

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries scaled(const Rational& factor) const;
    TruncatedSeries partial(Var var) const;

private:
    int truncation_;
    std::map<Monomial, Rational> terms_;
};

using HurwitzSupplier = std::function<Rational(int genus, const Partition& alpha)>;

// F^0 = sum_alpha d G^0 z^d u^(r^0) v_alpha h_alpha / (d! r^0!),
// F^1 = sum_alpha 12 G^1 z^d u^(r^1) v_alpha h_alpha / (d! r^1!),
// over all partitions of all d <= truncation.
TruncatedSeries build_potential(int genus, int truncation, const HurwitzSupplier& supplier);
TruncatedSeries build_potential(int genus, int truncation);  // recursion-backed

struct PdeReport {
    int genus;
    int truncation;
    std::vector<std::pair<Monomial, Rational>> residual;  // nonzero LHS - RHS terms

    bool ok() const { return residual.empty(); }
};

// Checks the boundary-recursion differential equation at finite truncation:
//   genus 0: F0_u = u z^2 (F0_z)^2 + 1/2 sum_{p,q} pq v_{p+q} F0_{v_p} F0_{v_q}
//   genus 1: F1_u = u z^2 (F0_zz + 2 F0_z F1_z)
//            + sum_{p,q} pq v_{p+q} (1/2 F0_{v_p v_q} + F0_{v_p} F1_{v_q})
// with p, q >= 1 and p + q <= truncation. Nonzero residual monomials are
// reported, not thrown.
PdeReport verify_pde(int genus, int truncation, const HurwitzSupplier& supplier);
PdeReport verify_pde(int genus, int truncation);

}  // namespace hurwitz
