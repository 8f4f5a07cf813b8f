#include "qbraid/cyclotomic.hpp"

#include <cstdlib>

namespace qbraid {

namespace {

QPoly x_power_minus_one(int m) {
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
    c.front() = Rational(-1);
    c.back() = Rational(1);
    return QPoly({}, 0, std::move(c));
}

}  // namespace

QPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw Error("cyclotomic_polynomial: order must be positive");
    QPoly p = x_power_minus_one(m);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = poly_exact_div(p, cyclotomic_polynomial(d));
    return p;
}

int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

CycloField CycloField::make(int m) {
    if (m < 1) throw Error("cyclotomic order must be positive");
    if (m == 1) {
        // Q itself is requested constantly; share one immutable instance.
        static const std::shared_ptr<const CycloData> rationals = [] {
            auto d = std::make_shared<CycloData>();
            d->modulus = {Rational(-1), Rational(1)};
            return d;
        }();
        CycloField f;
        f.data_ = rationals;
        return f;
    }
    auto d = std::make_shared<CycloData>();
    d->m = m;
    QPoly phi = cyclotomic_polynomial(m);
    d->phi = phi.hi();
    for (int e = 0; e <= phi.hi(); ++e) d->modulus.push_back(phi.coeff(e));
    CycloField f;
    f.data_ = std::move(d);
    return f;
}

std::string CycloField::name() const {
    return order() == 1 ? "Q" : "Q(zeta" + std::to_string(order()) + ")";
}

Cyclotomic::Cyclotomic(CycloField f) : f_(std::move(f)), c_(static_cast<std::size_t>(f_.degree()), Rational(0)) {}

Cyclotomic::Cyclotomic(CycloField f, std::vector<Rational> coeffs) : f_(std::move(f)) {
    reduce(coeffs);
    c_ = std::move(coeffs);
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, const CycloField& f) {
    Cyclotomic a(f);
    a.c_[0] = r;
    return a;
}

Cyclotomic Cyclotomic::zeta_power(const CycloField& f, long k) {
    long m = f.order();
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = Rational(1);
    return Cyclotomic(f, std::move(v));
}

bool Cyclotomic::is_zero() const {
    for (const Rational& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0].is_one(); }

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (f_ != o.f_) throw FieldMismatch("cyclotomic orders " + std::to_string(order()) + " and " + std::to_string(o.order()));
}

// Reduces v modulo the monic Phi_m and pads to length phi.
void Cyclotomic::reduce(std::vector<Rational>& v) const {
    const auto& mod = f_.modulus();
    std::size_t phi = static_cast<std::size_t>(f_.degree());
    for (std::size_t e = v.size(); e-- > phi;) {
        Rational t = v[e];
        if (t.is_zero()) continue;
        for (std::size_t i = 0; i < phi; ++i)
            if (!mod[i].is_zero()) v[e - phi + i] -= t * mod[i];
    }
    v.resize(phi, Rational(0));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same(o);
    if (c_.size() == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> p(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) p[i + j] += c_[i] * o.c_[j];
    }
    reduce(p);
    c_ = std::move(p);
    return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (Rational& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of cyclotomic zero");
    if (is_rational()) return from_rational(c_[0].inv(), f_);
    QPoly a({}, 0, c_);
    QPoly mod({}, 0, f_.modulus());
    auto [g, s, t] = poly_ext_gcd(a, mod);
    if (!g.is_one()) throw Error("cyclotomic inverse: gcd with Phi_m is not 1");
    std::vector<Rational> v;
    for (int e = 0; e <= std::max(0, s.hi()); ++e) v.push_back(s.coeff(e));
    return Cyclotomic(f_, std::move(v));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclotomic r = from_rational(Rational(1), f_), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Cyclotomic Cyclotomic::embed(const CycloField& target) const {
    if (target.order() % order() != 0)
        throw FieldMismatch("cannot embed " + f_.name() + " into " + target.name());
    if (target == f_) return *this;
    long step = target.order() / order();
    Cyclotomic r(target);
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) r += from_rational(c_[k], target) * zeta_power(target, step * static_cast<long>(k));
    return r;
}

std::vector<Term> Cyclotomic::terms() const {
    std::vector<Term> out;
    std::string base = "zeta" + std::to_string(order());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string atom = k == 0 ? "" : k == 1 ? base : base + "^" + std::to_string(k);
        out.push_back(Term{c_[k], atom});
    }
    return out;
}

}  // namespace qbraid
