#include "qbraid/qcomb.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qbraid {

namespace {

QPoly qp(long coef, long e) { return QPoly::monomial(Rational(coef), static_cast<int>(e)); }

long tri(long n) { return n * (n - 1) / 2; }

Rational classical_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

long sign(long e) { return e % 2 == 0 ? 1 : -1; }

std::string both(const Scalar& l, const Scalar& r) { return "lhs = " + l.str() + ", rhs = " + r.str(); }

}  // namespace

QContext QContext::symbolic(const FieldContext& base) {
    FieldContext f = base.with_q();
    return QContext(Scalar::q(f), true);
}

QContext QContext::at(const Scalar& q0) {
    if (q0.is_zero()) throw ZeroQ("q must be nonzero");
    bool ind = q0.ctx().symbolic() && q0 == Scalar::q(q0.ctx());
    return QContext(q0, ind);
}

Scalar QContext::power(long e) const {
    if (indeterminate_) return Scalar::q_power(static_cast<int>(e), field());
    return q_.pow(e);
}

Scalar QContext::eval(const QPoly& p) const {
    if (indeterminate_) return Scalar::from_laurent(p, field());
    return Scalar::from_laurent(p, FieldContext(field().base(), true)).evaluate(q_);
}

QContext QContext::inverted() const { return QContext::at(q_.inv()); }

QContext QContext::lift(const FieldContext& target) const {
    if (indeterminate_) return symbolic(target.base_field());
    return at(q_.coerce(target));
}

QPoly q_int_poly(long n) {
    QPoly r;
    for (long i = 0; i < n; ++i) r = r + qp(1, i);
    return r;
}

QPoly q_factorial_poly(long n) {
    QPoly r = QPoly::one({});
    for (long i = 1; i <= n; ++i) r = r * q_int_poly(i);
    return r;
}

QPoly q_binomial_poly(long n, long k) {
    if (k < 0 || k > n) return QPoly();
    static std::mutex mu;
    static std::map<std::pair<long, long>, QPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, k});
        if (it != memo.end()) return it->second;
    }
    QPoly c = poly_exact_div(q_factorial_poly(n), q_factorial_poly(k) * q_factorial_poly(n - k));
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(n, k), c);
    return c;
}

Scalar q_int(long n, const QContext& qc) { return qc.eval(q_int_poly(n)); }

Scalar q_factorial(long n, const QContext& qc) { return qc.eval(q_factorial_poly(n)); }

Scalar q_pochhammer(const Scalar& a, long n, const QContext& qc) {
    Scalar r = qc.one();
    Scalar aq = a;
    for (long i = 0; i < n; ++i) {
        r *= qc.one() - aq;
        aq *= qc.q();
    }
    return r;
}

Scalar q_triangular_power(long n, const QContext& qc) { return qc.power(tri(n)); }

Scalar q_rn(long r, long n, const QContext& qc) {
    Scalar v = q_triangular_power(r, qc) * q_triangular_power(n - r, qc) / q_triangular_power(n, qc);
    if (v != qc.power(-(n - r) * r)) throw Error("q_r q_{n-r}/q_n differs from q^{-(n-r)r}");
    return v;
}

Scalar q_binomial(long n, long k, const QContext& qc) { return qc.eval(q_binomial_poly(n, k)); }

Scalar q_binomial_recursive(long n, long k, const QContext& qc, Recursion variant) {
    if (k < 0 || k > n) return qc.zero();
    // Row by row from C_0^0.
    std::vector<Scalar> row{qc.one()};
    for (long m = 0; m < n; ++m) {
        std::vector<Scalar> next(static_cast<std::size_t>(m + 2), qc.one());
        for (long j = 1; j <= m; ++j) {
            const Scalar& a = row[static_cast<std::size_t>(j - 1)];
            const Scalar& b = row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] =
                variant == Recursion::First ? a + qc.power(j) * b : qc.power(m + 1 - j) * a + b;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

QTriangleRow triangle_row(long n, const QContext& qc) {
    QTriangleRow row{n, {}};
    for (long k = 0; k <= n; ++k) row.entries.push_back(q_binomial(n, k, qc));
    return row;
}

std::vector<Scalar> gauss_expand(long k, const QContext& qc) {
    std::vector<Scalar> c{qc.one()};
    for (long i = 0; i < k; ++i) {
        // multiply by (1 + x q^i)
        Scalar qi = qc.power(i);
        std::vector<Scalar> next(c.size() + 1, qc.zero());
        for (std::size_t r = 0; r < c.size(); ++r) {
            next[r] += c[r];
            next[r + 1] += c[r] * qi;
        }
        c = std::move(next);
    }
    return c;
}

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::Bin1q: return "bin1q";
        case Identity::Bin2q: return "bin2q";
        case Identity::QSymmetry: return "qsym";
        case Identity::ClassicalBin1: return "bin1";
        case Identity::ClassicalBin2: return "bin2";
    }
    return "?";
}

Identity identity_from_name(const std::string& name) {
    for (Identity id : {Identity::Bin1q, Identity::Bin2q, Identity::QSymmetry, Identity::ClassicalBin1,
                        Identity::ClassicalBin2})
        if (identity_name(id) == name) return id;
    throw Error("unknown identity '" + name + "'");
}

IdentityReport verify_identity(Identity id, long n, const QContext& qc) {
    IdentityReport rep;
    rep.id = id;
    rep.n = n;
    auto record = [&](bool ok, const std::string& where) {
        ++rep.instances;
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.first_failure = where;
        }
    };
    auto C = [&](long a, long b) { return q_binomial(a, b, qc); };
    auto qn = [&](long a) { return q_triangular_power(a, qc); };

    switch (id) {
        case Identity::Bin1q: {
            for (long m = 0; m <= n; ++m)
                for (long j = 0; j <= n; ++j) {
                    Scalar left = qc.zero(), right = qc.zero();
                    for (long i = 0; i <= n; ++i) {
                        Scalar cc = C(m, i) * C(i, j);
                        if (cc.is_zero()) continue;
                        left += qc.from_int(sign(i + j)) * qn(i - j) * cc;
                        right += qc.from_int(sign(i + m)) * qn(m - i) * cc;
                    }
                    Scalar delta = qc.from_int(m == j ? 1 : 0);
                    std::ostringstream w;
                    w << "m=" << m << " j=" << j << ": ";
                    record(left == delta, w.str() + "first sum " + both(left, delta));
                    record(right == delta, w.str() + "second sum " + both(right, delta));
                }
            break;
        }
        case Identity::Bin2q: {
            QContext qi = qc.inverted();
            for (long k = 0; k <= n; ++k)
                for (long m = 0; m <= n; ++m) {
                    Scalar left = qc.zero();
                    for (long r = 0; r <= n; ++r) {
                        Scalar a = C(n - k, n - r), b = q_binomial(r, m, qi);
                        if (a.is_zero() || b.is_zero()) continue;
                        left += a * qn(r) * qn(n - r) / qn(n) * qc.from_int(sign(n - r)) / qn(r - m) * b;
                    }
                    Scalar right = qn(k - (n - m)) / qn(k) * C(k, n - m);
                    std::ostringstream w;
                    w << "k=" << k << " m=" << m << ": ";
                    record(left == right, w.str() + both(left, right));
                }
            break;
        }
        case Identity::QSymmetry: {
            QContext qi = qc.inverted();
            for (long k = 0; k <= n; ++k) {
                Scalar left = C(n, k);
                Scalar right = qn(n) / (qn(k) * qn(n - k)) * q_binomial(n, k, qi);
                record(left == right, "k=" + std::to_string(k) + ": " + both(left, right));
            }
            break;
        }
        case Identity::ClassicalBin1: {
            for (long m = 0; m <= n; ++m)
                for (long j = 0; j <= n; ++j) {
                    Rational a(0), b(0);
                    for (long i = 0; i <= n; ++i) {
                        Rational cc = classical_binomial(m, i) * classical_binomial(i, j);
                        a += Rational(sign(i + m)) * cc;
                        b += Rational(sign(i + j)) * cc;
                    }
                    Rational d(m == j ? 1 : 0);
                    std::ostringstream w;
                    w << "m=" << m << " j=" << j << ": sums " << a.str() << ", " << b.str();
                    record(a == d && b == d, w.str());
                }
            break;
        }
        case Identity::ClassicalBin2: {
            for (long m = 0; m <= n; ++m)
                for (long j = 0; j <= n; ++j) {
                    Rational a(0), b(0);
                    for (long i = 0; i <= n; ++i) {
                        Rational sg(sign(i));
                        a += sg * classical_binomial(m, i) * classical_binomial(n - i, n - j);
                        b += sg * classical_binomial(m, i) * classical_binomial(n - i, j - i);
                    }
                    Rational r = classical_binomial(n - m, j);
                    std::ostringstream w;
                    w << "m=" << m << " j=" << j << ": sums " << a.str() << ", " << b.str() << " vs " << r.str();
                    record(a == r && b == r, w.str());
                }
            break;
        }
    }
    return rep;
}

}  // namespace qbraid
