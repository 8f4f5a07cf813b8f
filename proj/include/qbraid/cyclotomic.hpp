#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qbraid/laurent.hpp"
#include "qbraid/rational.hpp"

namespace qbraid {

using QPoly = LaurentPoly<Rational>;

// Phi_m(x) by exact division of x^m - 1 by Phi_d(x) for every proper divisor d.
QPoly cyclotomic_polynomial(int m);

int euler_phi(int m);

// Shared immutable description of Q(zeta_m).
struct CycloData {
    int m = 1;
    int phi = 1;
    std::vector<Rational> modulus;  // monic Phi_m, low degree first, size phi + 1
};

class CycloField {
public:
    CycloField() = default;
    static CycloField make(int m);

    int order() const { return data_ ? data_->m : 0; }
    int degree() const { return data_->phi; }
    const std::vector<Rational>& modulus() const { return data_->modulus; }
    bool valid() const { return static_cast<bool>(data_); }
    std::string name() const;

    friend bool operator==(const CycloField& a, const CycloField& b) { return a.order() == b.order(); }
    friend bool operator!=(const CycloField& a, const CycloField& b) { return !(a == b); }

private:
    std::shared_ptr<const CycloData> data_;
};

// Element of Q(zeta_m), stored as a residue mod Phi_m of degree < phi(m).
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(CycloField f);  // zero
    Cyclotomic(CycloField f, std::vector<Rational> coeffs);

    static Cyclotomic from_rational(const Rational& r, const CycloField& f);
    static Cyclotomic zeta_power(const CycloField& f, long k);

    const CycloField& field() const { return f_; }
    int order() const { return f_.order(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyclotomic inv() const;
    Cyclotomic pow(long e) const;
    // Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^(M/m); requires m | M.
    Cyclotomic embed(const CycloField& target) const;

    std::vector<Term> terms() const;
    std::string str() const { return format_terms(terms()); }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    void check_same(const Cyclotomic& o) const;
    void reduce(std::vector<Rational>& v) const;

    CycloField f_;
    std::vector<Rational> c_;
};

template <>
struct CoeffTraits<Cyclotomic> {
    using Ctx = CycloField;
    static Ctx ctx(const Cyclotomic& a) { return a.field(); }
    static Cyclotomic zero(const Ctx& f) { return Cyclotomic(f); }
    static Cyclotomic one(const Ctx& f) { return Cyclotomic::from_rational(Rational(1), f); }
    static Cyclotomic from_rational(const Rational& r, const Ctx& f) { return Cyclotomic::from_rational(r, f); }
    static bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
    static bool is_one(const Cyclotomic& a) { return a.is_one(); }
    static Cyclotomic inv(const Cyclotomic& a) { return a.inv(); }
    static std::vector<Term> terms(const Cyclotomic& a) { return a.terms(); }
};

}  // namespace qbraid
