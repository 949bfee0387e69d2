#include "hurwitz/recursion.hpp"

#include <stdexcept>

#include "hurwitz/splittings.hpp"

namespace hurwitz {

namespace {

Rational genus0_boundary_sum(const Partition& alpha, HurwitzTable& table) {
    const long d = alpha.degree();
    const long r = r_value(0, alpha);
    Rational total(0);
    // roaming ramification meets a fixed simple branch point: curve splits
    for (const SplitTerm& s : ordered_splittings(alpha)) {
        const long i = s.beta.degree();
        const long j = s.gamma.degree();
        Rational coeff = make_rational(
            s.multiplicity * (r - 1) * binomial(r - 2, r_value(0, s.beta)) * (i * i) * (j * j), d);
        total += coeff * hurwitz_recursive(0, s.beta, table) * hurwitz_recursive(0, s.gamma, table);
    }
    // roaming ramification meets a point over infinity: part alpha_k cuts into p + q
    for (const PartSplitTerm& ps : part_splittings(alpha)) {
        const long i = ps.beta.degree();
        const long j = ps.gamma.degree();
        Rational coeff = make_rational(
            ps.multiplicity * ps.part_value * binomial(r - 1, r_value(0, ps.beta)) * i * j, 2 * d);
        total += coeff * hurwitz_recursive(0, ps.beta, table) * hurwitz_recursive(0, ps.gamma, table);
    }
    return total;
}

Rational genus1_boundary_sum(const Partition& alpha, HurwitzTable& table) {
    const long d = alpha.degree();
    const long r1 = r_value(1, alpha);

    // irreducible nodal degeneration at a fixed branch point
    Rational total = make_rational(2 * binomial(d, 2) * d * (r1 - 1), 12) *
                     hurwitz_recursive(0, alpha, table);

    // irreducible nodal degeneration over infinity: alpha_k -> p + q, ordered
    int previous = 0;
    for (int value : alpha.parts()) {
        if (value == previous) continue;
        previous = value;
        if (value < 2) continue;
        const long occurrences = alpha.multiplicity(value);
        for (int p = 1; p < value; ++p) {
            Partition alpha_prime = alpha.replace_part(value, p, value - p);
            total += make_rational(BigInt(d) * occurrences * value, 24) *
                     hurwitz_recursive(0, alpha_prime, table);
        }
    }

    // reducible degeneration at a fixed branch point: genus 0 piece beta, genus 1 piece gamma
    for (const SplitTerm& s : ordered_splittings(alpha)) {
        const long i = s.beta.degree();
        const long j = s.gamma.degree();
        Rational coeff(s.multiplicity * BigInt(2) * (r1 - 1) *
                       binomial(r1 - 2, r_value(0, s.beta)) * (i * i) * j);
        total += coeff * hurwitz_recursive(0, s.beta, table) * hurwitz_recursive(1, s.gamma, table);
    }

    // reducible degeneration over infinity: p joins the genus 0 side
    for (const PartSplitTerm& ps : part_splittings(alpha)) {
        Rational coeff(ps.multiplicity * BigInt(ps.part_value) * ps.beta.degree() *
                       binomial(r1 - 1, r_value(0, ps.beta)));
        total += coeff * hurwitz_recursive(0, ps.beta, table) * hurwitz_recursive(1, ps.gamma, table);
    }
    return total;
}

}  // namespace

Rational hurwitz_recursive(int genus, const Partition& alpha, HurwitzTable& table) {
    if (genus != 0 && genus != 1) {
        throw std::invalid_argument("hurwitz_recursive: unsupported genus " + std::to_string(genus));
    }
    if (auto hit = table.lookup(genus, alpha)) return *hit;
    Rational value =
        genus == 0 ? genus0_boundary_sum(alpha, table) : genus1_boundary_sum(alpha, table);
    table.insert(genus, alpha, value);
    return value;
}

Rational genus2_conjecture(int d, HurwitzTable& table) {
    if (d < 1) throw std::invalid_argument("genus2_conjecture: d must be >= 1");

    auto per_cover = [&](int genus, int n) -> Rational {
        return hurwitz_recursive(genus, ones_partition(n), table) / Rational(factorial(n));
    };

    for (int n = 1; n <= d; ++n) {
        if (table.contains(2, ones_partition(n))) continue;

        Rational h2 = Rational(BigInt(n) * n) *
                      (make_rational(97 * BigInt(n), 136) - make_rational(20, 17)) * per_cover(1, n);
        for (int j = 1; j < n; ++j) {
            Rational h2_smaller = *table.lookup(2, ones_partition(n - j)) /
                                  Rational(factorial(n - j));
            h2 += per_cover(0, j) * h2_smaller *
                  Rational(binomial(2 * n, 2 * j - 2) * j * (n - j)) *
                  (make_rational(-115 * BigInt(j), 17) + Rational(8 * n));
            h2 += per_cover(1, j) * per_cover(1, n - j) *
                  Rational(binomial(2 * n, 2 * j) * j * (n - j)) *
                  (make_rational(BigInt(11697) * j * (n - j), 34) -
                   make_rational(BigInt(3899) * n * n, 68));
        }
        table.insert(2, ones_partition(n), Rational(factorial(n)) * h2);
    }
    return *table.lookup(2, ones_partition(d));
}

}  // namespace hurwitz
