#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qbraid/coeff.hpp"
#include "qbraid/error.hpp"

namespace qbraid {

// Cap on the exponent span of any symbolic polynomial, read once from
// QBRAID_MAX_DEGREE.
long max_degree();
void check_degree(long span);

// Laurent polynomial in q over the base field K. Stored densely from the
// lowest exponent; the first and last stored coefficients are nonzero and the
// zero polynomial stores nothing.
template <class K>
class LaurentPoly {
public:
    using Traits = CoeffTraits<K>;
    using Ctx = typename Traits::Ctx;

    LaurentPoly() = default;
    explicit LaurentPoly(Ctx ctx) : ctx_(std::move(ctx)) {}
    LaurentPoly(Ctx ctx, int lo, std::vector<K> coeffs)
        : ctx_(std::move(ctx)), lo_(lo), c_(std::move(coeffs)) {
        trim();
    }

    static LaurentPoly constant(const K& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const K& c, int e) {
        return LaurentPoly(Traits::ctx(c), e, std::vector<K>{c});
    }
    static LaurentPoly one(const Ctx& ctx) { return constant(Traits::one(ctx)); }
    static LaurentPoly q_power(const Ctx& ctx, int e) { return monomial(Traits::one(ctx), e); }

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && Traits::is_one(c_[0]); }
    bool is_monomial() const { return c_.size() == 1; }
    bool is_constant() const { return is_zero() || (c_.size() == 1 && lo_ == 0); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const { return c_.back(); }
    const K& trailing() const { return c_.front(); }

    K coeff(int e) const {
        if (e < lo_ || e > hi()) return Traits::zero(ctx_);
        return c_[static_cast<std::size_t>(e - lo_)];
    }

    LaurentPoly shift(int e) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.lo_ += e;
        return r;
    }

    LaurentPoly scale(const K& k) const {
        if (Traits::is_zero(k)) return LaurentPoly(ctx_);
        std::vector<K> c;
        c.reserve(c_.size());
        for (const K& a : c_) c.push_back(a * k);
        return LaurentPoly(ctx_, lo_, std::move(c));
    }

    // q -> q^{-1}
    LaurentPoly inverted_q() const {
        if (is_zero()) return *this;
        std::vector<K> c(c_.rbegin(), c_.rend());
        return LaurentPoly(ctx_, -hi(), std::move(c));
    }

    // Substitution q -> q^k for k != 0.
    LaurentPoly dilate(int k) const {
        if (is_zero()) return *this;
        if (k < 0) return dilate(-k).inverted_q();
        std::vector<K> c((c_.size() - 1) * static_cast<std::size_t>(k) + 1, Traits::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(k)] = c_[i];
        return LaurentPoly(ctx_, lo_ * k, std::move(c));
    }

    K eval(const K& x) const {
        if (is_zero()) return Traits::zero(ctx_);
        if (Traits::is_zero(x) && lo_ < 0) throw ZeroSubstitution("negative power of q evaluated at 0");
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        if (lo_ > 0) acc = acc * pow_k(x, lo_);
        if (lo_ < 0) acc = acc * pow_k(Traits::inv(x), -lo_);
        return acc;
    }

    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (Traits::is_zero(c_[i])) continue;
            int e = lo_ + static_cast<int>(i);
            std::string qa = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
            std::vector<Term> ct = Traits::terms(c_[i]);
            if (qa.empty()) {
                out.insert(out.end(), ct.begin(), ct.end());
            } else if (ct.size() == 1) {
                std::string a = ct[0].atom.empty() ? qa : ct[0].atom + "*" + qa;
                out.push_back(Term{ct[0].coef, a});
            } else {
                out.push_back(Term{Rational(1), "(" + format_terms(ct) + ")*" + qa});
            }
        }
        return out;
    }
    std::string str() const { return format_terms(terms()); }

    LaurentPoly operator-() const { return scale(-Traits::one(ctx_)); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::max(a.hi(), b.hi());
        std::vector<K> c(static_cast<std::size_t>(hi - lo + 1), Traits::zero(a.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i + static_cast<std::size_t>(a.lo_ - lo)] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i + static_cast<std::size_t>(b.lo_ - lo)] += b.c_[i];
        return LaurentPoly(a.ctx_, lo, std::move(c));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ctx_);
        check_degree(static_cast<long>(a.c_.size() + b.c_.size()) - 2);
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, Traits::zero(a.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentPoly(a.ctx_, a.lo_ + b.lo_, std::move(c));
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly r = one(ctx_), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    template <class F>
    auto map(F f, typename CoeffTraits<decltype(f(std::declval<K>()))>::Ctx ctx) const {
        using K2 = decltype(f(std::declval<K>()));
        std::vector<K2> c;
        c.reserve(c_.size());
        for (const K& a : c_) c.push_back(f(a));
        return LaurentPoly<K2>(std::move(ctx), lo_, std::move(c));
    }

private:
    static K pow_k(K x, int e) {
        K r = Traits::one(Traits::ctx(x));
        while (e) {
            if (e & 1) r = r * x;
            e >>= 1;
            if (e) x = x * x;
        }
        return r;
    }

    void trim() {
        std::size_t b = 0;
        while (b < c_.size() && Traits::is_zero(c_[b])) ++b;
        if (b == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t e = c_.size();
        while (Traits::is_zero(c_[e - 1])) --e;
        if (b > 0 || e < c_.size()) {
            c_.erase(c_.begin() + static_cast<long>(e), c_.end());
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(b));
        }
        lo_ += static_cast<int>(b);
    }

    Ctx ctx_{};
    int lo_ = 0;
    std::vector<K> c_;
};

// Ordinary-polynomial algorithms. Inputs must have no negative exponents.

template <class K>
std::pair<LaurentPoly<K>, LaurentPoly<K>> poly_divmod(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    using T = CoeffTraits<K>;
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {LaurentPoly<K>(a.ctx()), LaurentPoly<K>(a.ctx())};
    if (a.lo() < 0 || b.lo() < 0) throw Error("poly_divmod on a Laurent polynomial");
    int db = b.hi();
    std::vector<K> r(static_cast<std::size_t>(a.hi() + 1), T::zero(a.ctx()));
    for (int e = a.lo(); e <= a.hi(); ++e) r[static_cast<std::size_t>(e)] = a.coeff(e);
    if (a.hi() < db) return {LaurentPoly<K>(a.ctx()), a};
    std::vector<K> bc(static_cast<std::size_t>(db + 1), T::zero(a.ctx()));
    for (int e = b.lo(); e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
    K lead_inv = T::inv(b.leading());
    std::vector<K> qc(static_cast<std::size_t>(a.hi() - db + 1), T::zero(a.ctx()));
    for (int e = a.hi(); e >= db; --e) {
        K t = r[static_cast<std::size_t>(e)];
        if (T::is_zero(t)) continue;
        t = t * lead_inv;
        qc[static_cast<std::size_t>(e - db)] = t;
        for (int i = 0; i <= db; ++i) {
            if (T::is_zero(bc[static_cast<std::size_t>(i)])) continue;
            r[static_cast<std::size_t>(e - db + i)] -= t * bc[static_cast<std::size_t>(i)];
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {LaurentPoly<K>(a.ctx(), 0, std::move(qc)), LaurentPoly<K>(a.ctx(), 0, std::move(r))};
}

template <class K>
LaurentPoly<K> make_monic(const LaurentPoly<K>& a) {
    if (a.is_zero() || CoeffTraits<K>::is_one(a.leading())) return a;
    return a.scale(CoeffTraits<K>::inv(a.leading()));
}

template <class K>
LaurentPoly<K> poly_gcd(LaurentPoly<K> a, LaurentPoly<K> b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Returns (g, s, t) with s*a + t*b = g and g monic.
template <class K>
std::tuple<LaurentPoly<K>, LaurentPoly<K>, LaurentPoly<K>> poly_ext_gcd(LaurentPoly<K> a, LaurentPoly<K> b) {
    using P = LaurentPoly<K>;
    P s0 = P::one(a.ctx()), s1(a.ctx()), t0(a.ctx()), t1 = P::one(a.ctx());
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        P s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    K li = CoeffTraits<K>::inv(a.leading());
    return {a.scale(li), s0.scale(li), t0.scale(li)};
}

// Exact quotient; throws NonPolynomialQuotient when b does not divide a.
template <class K>
LaurentPoly<K> poly_exact_div(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw NonPolynomialQuotient("inexact polynomial division");
    return q;
}

}  // namespace qbraid
