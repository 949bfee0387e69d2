#include "hurwitz/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hurwitz/recursion.hpp"

namespace hurwitz {

void Monomial::trim() {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int Monomial::v_exponent(int index) const {
    if (index < 1 || index > static_cast<int>(v.size())) return 0;
    return v[static_cast<std::size_t>(index - 1)];
}

std::string Monomial::to_string() const {
    std::ostringstream out;
    auto emit = [&out](const std::string& name, int exponent) {
        if (exponent == 0) return;
        if (out.tellp() > 0) out << ' ';
        out << name;
        if (exponent != 1) out << '^' << exponent;
    };
    emit("z", z);
    emit("u", u);
    for (std::size_t i = 0; i < v.size(); ++i) emit("v" + std::to_string(i + 1), v[i]);
    if (out.tellp() == 0) return "1";
    return out.str();
}

TruncatedSeries::TruncatedSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("TruncatedSeries: negative truncation");
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
    Monomial key = m;
    key.trim();
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(Monomial m, const Rational& coeff) {
    if (coeff == 0 || m.z > truncation_) return;
    m.trim();
    auto [it, inserted] = terms_.emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    if (truncation_ != rhs.truncation_) throw std::invalid_argument("series truncations differ");
    TruncatedSeries out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    if (truncation_ != rhs.truncation_) throw std::invalid_argument("series truncations differ");
    TruncatedSeries out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    if (truncation_ != rhs.truncation_) throw std::invalid_argument("series truncations differ");
    TruncatedSeries out(truncation_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            if (ma.z + mb.z > truncation_) continue;
            Monomial m;
            m.z = ma.z + mb.z;
            m.u = ma.u + mb.u;
            m.v.resize(std::max(ma.v.size(), mb.v.size()), 0);
            for (std::size_t i = 0; i < ma.v.size(); ++i) m.v[i] += ma.v[i];
            for (std::size_t i = 0; i < mb.v.size(); ++i) m.v[i] += mb.v[i];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& factor) const {
    TruncatedSeries out(truncation_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * factor);
    return out;
}

TruncatedSeries TruncatedSeries::partial(Var var) const {
    if (var.kind == Var::Kind::V && (var.index < 1 || var.index > truncation_)) {
        throw std::invalid_argument("partial: unknown variable v" + std::to_string(var.index));
    }
    TruncatedSeries out(truncation_);
    for (const auto& [m, c] : terms_) {
        Monomial next = m;
        int exponent = 0;
        switch (var.kind) {
            case Var::Kind::Z:
                exponent = m.z;
                if (exponent) --next.z;
                break;
            case Var::Kind::U:
                exponent = m.u;
                if (exponent) --next.u;
                break;
            case Var::Kind::V:
                exponent = m.v_exponent(var.index);
                if (exponent) --next.v[static_cast<std::size_t>(var.index - 1)];
                break;
        }
        if (exponent == 0) continue;
        out.add_term(std::move(next), c * exponent);
    }
    return out;
}

TruncatedSeries build_potential(int genus, int truncation, const HurwitzSupplier& supplier) {
    if (genus != 0 && genus != 1) {
        throw std::invalid_argument("build_potential: unsupported genus " + std::to_string(genus));
    }
    if (truncation < 1) throw std::invalid_argument("build_potential: truncation must be >= 1");
    TruncatedSeries out(truncation);
    for (int d = 1; d <= truncation; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            const int r = r_value(genus, alpha);
            Rational coeff = Rational(genus == 0 ? d : 12) * supplier(genus, alpha) *
                             make_rational(conjugacy_class_size(alpha),
                                           factorial(d) * factorial(r));
            if (coeff == 0) continue;
            Monomial m;
            m.z = d;
            m.u = r;
            m.v.resize(static_cast<std::size_t>(alpha.parts().front()), 0);
            for (int part : alpha.parts()) ++m.v[static_cast<std::size_t>(part - 1)];
            out.add_term(std::move(m), coeff);
        }
    }
    return out;
}

TruncatedSeries build_potential(int genus, int truncation) {
    HurwitzTable table;
    return build_potential(genus, truncation, [&table](int g, const Partition& alpha) {
        return hurwitz_recursive(g, alpha, table);
    });
}

namespace {

TruncatedSeries monomial_series(int truncation, const Monomial& m) {
    TruncatedSeries out(truncation);
    out.add_term(m, Rational(1));
    return out;
}

Monomial v_monomial(int index) {
    Monomial m;
    m.v.resize(static_cast<std::size_t>(index), 0);
    m.v[static_cast<std::size_t>(index - 1)] = 1;
    return m;
}

}  // namespace

PdeReport verify_pde(int genus, int truncation, const HurwitzSupplier& supplier) {
    if (genus != 0 && genus != 1) {
        throw std::invalid_argument("verify_pde: unsupported genus " + std::to_string(genus));
    }
    if (truncation < 1) throw std::invalid_argument("verify_pde: truncation must be >= 1");

    const int D = truncation;
    TruncatedSeries f0 = build_potential(0, D, supplier);
    Monomial uz2;
    uz2.z = 2;
    uz2.u = 1;
    TruncatedSeries uz2_series = monomial_series(D, uz2);

    TruncatedSeries residual(D);
    if (genus == 0) {
        TruncatedSeries f0z = f0.partial(Var::z());
        TruncatedSeries rhs = uz2_series * f0z * f0z;
        for (int p = 1; p < D; ++p) {
            TruncatedSeries f0vp = f0.partial(Var::v(p));
            for (int q = 1; p + q <= D; ++q) {
                rhs = rhs + (monomial_series(D, v_monomial(p + q)) * f0vp * f0.partial(Var::v(q)))
                                .scaled(make_rational(BigInt(p) * q, 2));
            }
        }
        residual = f0.partial(Var::u()) - rhs;
    } else {
        TruncatedSeries f1 = build_potential(1, D, supplier);
        TruncatedSeries f0z = f0.partial(Var::z());
        TruncatedSeries rhs =
            uz2_series * (f0z.partial(Var::z()) + (f0z * f1.partial(Var::z())).scaled(Rational(2)));
        for (int p = 1; p < D; ++p) {
            TruncatedSeries f0vp = f0.partial(Var::v(p));
            for (int q = 1; p + q <= D; ++q) {
                TruncatedSeries mixed = f0vp.partial(Var::v(q)).scaled(make_rational(1, 2)) +
                                        f0vp * f1.partial(Var::v(q));
                rhs = rhs + (monomial_series(D, v_monomial(p + q)) * mixed)
                                .scaled(Rational(BigInt(p) * q));
            }
        }
        residual = f1.partial(Var::u()) - rhs;
    }

    PdeReport report{genus, truncation, {}};
    for (const auto& [m, c] : residual.terms()) report.residual.emplace_back(m, c);
    return report;
}

PdeReport verify_pde(int genus, int truncation) {
    HurwitzTable table;
    return verify_pde(genus, truncation, [&table](int g, const Partition& alpha) {
        return hurwitz_recursive(g, alpha, table);
    });
}

}  // namespace hurwitz
