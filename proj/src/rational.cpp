#include "qbraid/rational.hpp"

namespace qbraid {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'", 0);
    if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of rational zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace qbraid
