#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qbraid/cyclotomic.hpp"
#include "qbraid/laurent.hpp"
#include "qbraid/ratfunc.hpp"
#include "qbraid/rational.hpp"

namespace qbraid {

// Ambient field: Q(zeta_m), optionally extended by the indeterminate q.
class FieldContext {
public:
    FieldContext() : base_(CycloField::make(1)) {}
    FieldContext(CycloField base, bool symbolic) : base_(std::move(base)), symbolic_(symbolic) {}

    static FieldContext rational() { return FieldContext(); }
    static FieldContext make(int m, bool symbolic) { return FieldContext(CycloField::make(m), symbolic); }

    int order() const { return base_.order(); }
    bool symbolic() const { return symbolic_; }
    const CycloField& base() const { return base_; }
    FieldContext base_field() const { return FieldContext(base_, false); }
    FieldContext with_q() const { return FieldContext(base_, true); }
    std::string name() const;

    friend bool operator==(const FieldContext& a, const FieldContext& b) {
        return a.order() == b.order() && a.symbolic_ == b.symbolic_;
    }
    friend bool operator!=(const FieldContext& a, const FieldContext& b) { return !(a == b); }

private:
    CycloField base_;
    bool symbolic_ = false;
};

// Smallest context containing both.
FieldContext join(const FieldContext& a, const FieldContext& b);
bool embeds_into(const FieldContext& from, const FieldContext& to);

using QRatFunc = RatFunc<Rational>;
using CRatFunc = RatFunc<Cyclotomic>;
using CPoly = LaurentPoly<Cyclotomic>;

class Scalar {
public:
    using Rep = std::variant<Rational, Cyclotomic, QRatFunc, CRatFunc>;

    Scalar() : rep_(Rational(0)) {}
    Scalar(FieldContext ctx, Rep rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

    static Scalar from_int(long v, const FieldContext& ctx) { return from_rational(Rational(v), ctx); }
    static Scalar from_rational(const Rational& r, const FieldContext& ctx);
    static Scalar q(const FieldContext& ctx) { return q_power(1, ctx); }
    static Scalar q_power(int e, const FieldContext& ctx);
    static Scalar zeta(int m, const FieldContext& ctx, long power = 1);
    // Integer-coefficient Laurent polynomial read at the indeterminate of ctx.
    static Scalar from_laurent(const QPoly& p, const FieldContext& ctx);

    const FieldContext& ctx() const { return ctx_; }
    const Rep& rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;
    // True when no denominator other than a power of q is present.
    bool is_laurent() const;

    Scalar inv() const;
    Scalar pow(long e) const;
    Scalar coerce(const FieldContext& target) const;
    // Substitutes q -> q0. The result lives in join(base of ctx, ctx of q0).
    Scalar evaluate(const Scalar& q0) const;
    Scalar inverted_q() const;

    std::string str() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void check(const Scalar& o, const char* op) const;

    FieldContext ctx_;
    Rep rep_;
};

// Coerces every element into the join of their contexts (and of extra).
std::vector<Scalar> unify(const std::vector<Scalar>& xs, const FieldContext& extra = FieldContext());

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qbraid
