#pragma once

#include <string>
#include <utility>

#include "qbraid/laurent.hpp"

namespace qbraid {

// Rational function num/den in q. Canonical form: den is an ordinary
// polynomial with nonzero constant term and leading coefficient 1, and
// gcd(num, den) = 1. Any power of q lives in num.
template <class K>
class RatFunc {
public:
    using Poly = LaurentPoly<K>;
    using Traits = CoeffTraits<K>;

    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.ctx())) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc zero(const typename Poly::Ctx& ctx) { return RatFunc(Poly(ctx)); }
    static RatFunc constant(const K& c) { return RatFunc(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const typename Poly::Ctx& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r(Poly::one(ctx())), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    RatFunc inverted_q() const { return RatFunc(num_.inverted_q(), den_.inverted_q()); }

    K eval(const K& x) const {
        if (Traits::is_zero(x)) throw ZeroSubstitution("rational function evaluated at q = 0");
        K d = den_.eval(x);
        if (Traits::is_zero(d)) throw PoleAtPoint("denominator vanishes at the evaluation point");
        return num_.eval(x) / d;
    }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    template <class F>
    auto map(F f, typename CoeffTraits<decltype(f(std::declval<K>()))>::Ctx c) const {
        using R = RatFunc<decltype(f(std::declval<K>()))>;
        return R(num_.map(f, c), den_.map(f, c));
    }

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one(num_.ctx());
            return;
        }
        int e = den_.lo();
        num_ = num_.shift(-e);
        den_ = den_.shift(-e);
        if (den_.size() == 1) {
            num_ = num_.scale(Traits::inv(den_.leading()));
            den_ = Poly::one(num_.ctx());
            return;
        }
        int a = num_.lo();
        Poly p = num_.shift(-a);
        Poly g = poly_gcd(p, den_);
        if (!g.is_one()) {
            p = poly_exact_div(p, g);
            den_ = poly_exact_div(den_, g);
        }
        if (!Traits::is_one(den_.leading())) {
            K li = Traits::inv(den_.leading());
            p = p.scale(li);
            den_ = den_.scale(li);
        }
        num_ = p.shift(a);
    }

    Poly num_;
    Poly den_;
};

}  // namespace qbraid
