#include "qbraid/scalar.hpp"

#include <numeric>
#include <ostream>
#include <type_traits>

namespace qbraid {

namespace {

template <class>
inline constexpr bool always_false = false;

Cyclotomic lift(const Rational& r, const CycloField& f) { return Cyclotomic::from_rational(r, f); }

CPoly lift(const QPoly& p, const CycloField& f) {
    return p.map([&](const Rational& r) { return lift(r, f); }, f);
}

CPoly embed(const CPoly& p, const CycloField& f) {
    return p.map([&](const Cyclotomic& c) { return c.embed(f); }, f);
}

// Coefficient of a base-field polynomial as a Scalar of the base field.
Scalar coeff_scalar(const Rational& c, const FieldContext& base) { return Scalar(base, c); }
Scalar coeff_scalar(const Cyclotomic& c, const FieldContext& base) { return Scalar(base, c); }

template <class K>
Scalar eval_poly(const LaurentPoly<K>& p, const Scalar& x, const FieldContext& base) {
    const FieldContext& T = x.ctx();
    if (p.is_zero()) return Scalar::from_int(0, T);
    Scalar acc = coeff_scalar(p.leading(), base).coerce(T);
    for (int e = p.hi() - 1; e >= p.lo(); --e) acc = acc * x + coeff_scalar(p.coeff(e), base).coerce(T);
    if (p.lo() != 0) acc = acc * x.pow(p.lo());
    return acc;
}

}  // namespace

std::string FieldContext::name() const {
    std::string b = base_.name();
    return symbolic_ ? b + "(q)" : b;
}

FieldContext join(const FieldContext& a, const FieldContext& b) {
    int m = std::lcm(a.order(), b.order());
    bool sym = a.symbolic() || b.symbolic();
    if (m == a.order()) return FieldContext(a.base(), sym);
    if (m == b.order()) return FieldContext(b.base(), sym);
    return FieldContext::make(m, sym);
}

bool embeds_into(const FieldContext& from, const FieldContext& to) {
    return to.order() % from.order() == 0 && (!from.symbolic() || to.symbolic());
}

Scalar Scalar::from_rational(const Rational& r, const FieldContext& ctx) {
    bool cyc = ctx.order() > 1;
    if (!ctx.symbolic()) return cyc ? Scalar(ctx, lift(r, ctx.base())) : Scalar(ctx, r);
    if (cyc) return Scalar(ctx, CRatFunc(CPoly::constant(lift(r, ctx.base()))));
    return Scalar(ctx, QRatFunc(QPoly::constant(r)));
}

Scalar Scalar::q_power(int e, const FieldContext& ctx) {
    if (!ctx.symbolic()) throw FieldMismatch("q is not available in " + ctx.name());
    if (ctx.order() > 1) return Scalar(ctx, CRatFunc(CPoly::q_power(ctx.base(), e)));
    return Scalar(ctx, QRatFunc(QPoly::q_power({}, e)));
}

Scalar Scalar::zeta(int m, const FieldContext& ctx, long power) {
    if (m < 1 || ctx.order() % m != 0)
        throw FieldMismatch("zeta" + std::to_string(m) + " is not in " + ctx.name());
    if (ctx.order() == 1) return from_int(1, ctx);
    Cyclotomic z = Cyclotomic::zeta_power(ctx.base(), power * (ctx.order() / m));
    if (ctx.symbolic()) return Scalar(ctx, CRatFunc(CPoly::constant(z)));
    return Scalar(ctx, z);
}

Scalar Scalar::from_laurent(const QPoly& p, const FieldContext& ctx) {
    if (!ctx.symbolic()) throw FieldMismatch("polynomial in q needs a symbolic context, got " + ctx.name());
    if (ctx.order() > 1) return Scalar(ctx, CRatFunc(lift(p, ctx.base())));
    return Scalar(ctx, QRatFunc(p));
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& a) { return a.is_zero(); }, rep_);
}

bool Scalar::is_one() const {
    return std::visit([](const auto& a) { return a.is_one(); }, rep_);
}

bool Scalar::is_laurent() const {
    return std::visit(
        [](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, QRatFunc> || std::is_same_v<T, CRatFunc>)
                return a.is_laurent();
            else
                return true;
        },
        rep_);
}

void Scalar::check(const Scalar& o, const char* op) const {
    if (ctx_ != o.ctx_)
        throw FieldMismatch(std::string("operator ") + op + " between " + ctx_.name() + " and " + o.ctx_.name());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o, "+");
    std::visit([&](auto& a) { a += std::get<std::decay_t<decltype(a)>>(o.rep_); }, rep_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check(o, "-");
    std::visit([&](auto& a) { a -= std::get<std::decay_t<decltype(a)>>(o.rep_); }, rep_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o, "*");
    std::visit([&](auto& a) { a *= std::get<std::decay_t<decltype(a)>>(o.rep_); }, rep_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check(o, "/");
    if (o.is_zero()) throw DivisionByZero("division by zero in " + ctx_.name());
    std::visit([&](auto& a) { a = a / std::get<std::decay_t<decltype(a)>>(o.rep_); }, rep_);
    return *this;
}

Scalar operator-(const Scalar& a) {
    return Scalar(a.ctx_, std::visit([](const auto& x) { return Scalar::Rep(-x); }, a.rep_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b, "==");
    return a.rep_ == b.rep_;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + ctx_.name());
    return Scalar(ctx_, std::visit([](const auto& x) { return Rep(x.inv()); }, rep_));
}

Scalar Scalar::pow(long e) const {
    if (e < 0 && is_zero()) throw DivisionByZero("negative power of zero");
    return Scalar(ctx_, std::visit([&](const auto& x) { return Rep(x.pow(e)); }, rep_));
}

Scalar Scalar::coerce(const FieldContext& target) const {
    if (ctx_ == target) return *this;
    if (!embeds_into(ctx_, target)) throw FieldMismatch("cannot coerce " + ctx_.name() + " into " + target.name());
    const CycloField& f = target.base();
    bool cyc = target.order() > 1;
    return std::visit(
        [&](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return from_rational(x, target);
            } else if constexpr (std::is_same_v<T, Cyclotomic>) {
                Cyclotomic y = x.embed(f);
                if (target.symbolic()) return Scalar(target, CRatFunc(CPoly::constant(y)));
                return Scalar(target, y);
            } else if constexpr (std::is_same_v<T, QRatFunc>) {
                if (!cyc) return Scalar(target, x);
                return Scalar(target, CRatFunc(lift(x.num(), f), lift(x.den(), f)));
            } else if constexpr (std::is_same_v<T, CRatFunc>) {
                return Scalar(target, CRatFunc(embed(x.num(), f), embed(x.den(), f)));
            } else {
                static_assert(always_false<T>);
            }
        },
        rep_);
}

Scalar Scalar::evaluate(const Scalar& q0) const {
    if (!ctx_.symbolic()) return coerce(join(ctx_, q0.ctx()));
    if (q0.is_zero()) throw ZeroSubstitution("q evaluated at 0");
    FieldContext base = ctx_.base_field();
    FieldContext T = join(base, q0.ctx());
    if (T == base && q0.ctx() == base) {
        // Same base field: evaluate with the typed kernels.
        return std::visit(
            [&](const auto& f) -> Scalar {
                using F = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<F, QRatFunc>)
                    return Scalar(T, f.eval(std::get<Rational>(q0.rep())));
                else if constexpr (std::is_same_v<F, CRatFunc>)
                    return Scalar(T, f.eval(std::get<Cyclotomic>(q0.rep())));
                else
                    return *this;
            },
            rep_);
    }
    Scalar x = q0.coerce(T);
    return std::visit(
        [&](const auto& f) -> Scalar {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, QRatFunc> || std::is_same_v<F, CRatFunc>) {
                Scalar d = eval_poly(f.den(), x, base);
                if (d.is_zero()) throw PoleAtPoint("denominator vanishes at q = " + q0.str());
                return eval_poly(f.num(), x, base) / d;
            } else {
                return coerce(T);
            }
        },
        rep_);
}

Scalar Scalar::inverted_q() const {
    return std::visit(
        [&](const auto& f) -> Scalar {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, QRatFunc> || std::is_same_v<F, CRatFunc>)
                return Scalar(ctx_, f.inverted_q());
            else
                return *this;
        },
        rep_);
}

std::string Scalar::str() const {
    return std::visit([](const auto& x) { return x.str(); }, rep_);
}

std::vector<Scalar> unify(const std::vector<Scalar>& xs, const FieldContext& extra) {
    FieldContext T = extra;
    for (const Scalar& x : xs) T = join(T, x.ctx());
    std::vector<Scalar> out;
    out.reserve(xs.size());
    for (const Scalar& x : xs) out.push_back(x.coerce(T));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qbraid
