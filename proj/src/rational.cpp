#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt int_pow(const BigInt& base, long exponent) {
    if (exponent < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

Rational rational_pow(long base, long exponent) {
    if (base <= 0) throw std::invalid_argument("rational_pow: base must be positive");
    BigInt power = int_pow(BigInt(base), exponent >= 0 ? exponent : -exponent);
    return exponent >= 0 ? Rational(power) : make_rational(BigInt(1), power);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace hurwitz
