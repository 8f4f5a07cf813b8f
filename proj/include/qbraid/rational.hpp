#pragma once

#include <gmpxx.h>

#include <string>

#include "qbraid/error.hpp"

namespace qbraid {

// Thin value wrapper over mpq_class. Every operator returns a materialized
// Rational so generic code never holds a gmpxx expression template.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    static Rational parse(const std::string& text);

    const mpq_class& get() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inv() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(long e) const;

    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

}  // namespace qbraid
