#include "qbraid/rep.hpp"

namespace qbraid {

namespace {

long sgn(long e) { return e % 2 == 0 ? 1 : -1; }

std::size_t dim(long n) { return static_cast<std::size_t>(n + 1); }

template <class F>
ExactMatrix build(long n, const QContext& qc, F entry) {
    ExactMatrix m(dim(n), dim(n), qc.field());
    for (long k = 0; k <= n; ++k)
        for (long j = 0; j <= n; ++j) m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = entry(k, j);
    return m;
}

}  // namespace

ExactMatrix sigma1_matrix(long n, const QContext& qc) {
    return build(n, qc, [&](long k, long m) { return q_binomial(n - k, n - m, qc); });
}

ExactMatrix sigma1_inverse_closed(long n, const QContext& qc) {
    return build(n, qc, [&](long k, long m) {
        Scalar c = q_binomial(n - k, n - m, qc);
        if (c.is_zero()) return c;
        return qc.from_int(sgn(k + m)) * q_triangular_power(m - k, qc) * c;
    });
}

ExactMatrix sigma2_matrix(long n, const QContext& qc) {
    QContext qi = qc.inverted();
    return build(n, qc, [&](long k, long m) {
        Scalar c = q_binomial(k, m, qi);
        if (c.is_zero()) return c;
        return qc.from_int(sgn(k + m)) / q_triangular_power(k - m, qc) * c;
    });
}

ExactMatrix sigma2_via_involution(long n, const QContext& qc) {
    return inverse(sigma1_matrix(n, qc.inverted())).sharp();
}

ExactMatrix sigma2_inverse_closed(long n, const QContext& qc) {
    QContext qi = qc.inverted();
    return build(n, qc, [&](long k, long m) { return q_binomial(k, m, qi); });
}

ExactMatrix s_matrix(long n, const QContext& qc) {
    return build(n, qc, [&](long k, long m) {
        if (k + m != n) return qc.zero();
        return qc.from_int(sgn(k)) / q_triangular_power(k, qc);
    });
}

ExactMatrix lambda_canonical(long n, const QContext& qc) {
    return build(n, qc, [&](long k, long m) { return k == m ? q_rn(k, n, qc) : qc.zero(); });
}

ExactMatrix d_matrix(long n, const QContext& qc) {
    return build(n, qc, [&](long k, long m) { return k == m ? q_triangular_power(k, qc) : qc.zero(); });
}

bool canonical_identities_hold(long n, const QContext& qc) {
    ExactMatrix d = d_matrix(n, qc);
    bool lam = lambda_canonical(n, qc) == q_triangular_power(n, qc).inv() * (d * d.sharp());
    ExactMatrix s1 = build(n, qc, [&](long k, long m) { return k + m == n ? qc.from_int(sgn(k)) : qc.zero(); });
    bool s = s_matrix(n, qc) == inverse(d) * s1;
    return lam && s;
}

RepSpec RepSpec::raw(long n, const QContext& qc, const std::vector<Scalar>& lambda) {
    if (n < 0) throw ConstraintViolated("n must be nonnegative");
    if (lambda.size() != dim(n))
        throw ShapeMismatch("expected " + std::to_string(n + 1) + " lambda entries, got " + std::to_string(lambda.size()));
    for (std::size_t k = 0; k < lambda.size(); ++k)
        if (lambda[k].is_zero()) throw ConstraintViolated("lambda_" + std::to_string(k) + " is zero");
    std::vector<Scalar> lam = unify(lambda, qc.field());
    FieldContext f = lam.empty() ? qc.field() : lam[0].ctx();
    RepSpec spec(n, qc.lift(f));
    spec.lambda_ = lam;
    const QContext& q = spec.qc_;
    Scalar end = lam.front() * lam.back();
    for (long r = 0; r <= n; ++r) {
        Scalar want = end * q_rn(r, n, q);
        Scalar got = lam[static_cast<std::size_t>(r)] * lam[static_cast<std::size_t>(n - r)];
        if (want != got)
            throw CondQViolated("cond_q fails at r=" + std::to_string(r) + ": lambda_r lambda_{n-r} = " + got.str() +
                                    ", required " + want.str(),
                                static_cast<int>(r));
    }
    spec.c_ = end;
    return spec;
}

RepSpec RepSpec::factored(long n, const QContext& qc, const std::vector<Scalar>& lambda_prime) {
    if (n < 0) throw ConstraintViolated("n must be nonnegative");
    if (lambda_prime.size() != dim(n))
        throw ShapeMismatch("expected " + std::to_string(n + 1) + " lambda' entries, got " +
                            std::to_string(lambda_prime.size()));
    for (std::size_t k = 0; k < lambda_prime.size(); ++k)
        if (lambda_prime[k].is_zero()) throw ConstraintViolated("lambda'_" + std::to_string(k) + " is zero");
    std::vector<Scalar> lp = unify(lambda_prime, qc.field());
    RepSpec spec(n, qc.lift(lp[0].ctx()));
    spec.form_ = LambdaForm::Factored;
    spec.lambda_prime_ = lp;
    spec.c_ = lp.front() * lp.back();
    for (long r = 0; r <= n; ++r) {
        Scalar got = lp[static_cast<std::size_t>(r)] * lp[static_cast<std::size_t>(n - r)];
        if (got != spec.c_)
            throw CondQViolated("lambda'_r lambda'_{n-r} = " + got.str() + " differs from c = " + spec.c_.str() +
                                    " at r=" + std::to_string(r),
                                static_cast<int>(r));
    }
    for (long r = 0; r <= n; ++r)
        spec.lambda_.push_back(q_triangular_power(n - r, spec.qc_) * lp[static_cast<std::size_t>(r)]);
    return spec;
}

Representation build_representation(const RepSpec& spec) {
    long n = spec.n();
    const QContext& qc = spec.qc();
    ExactMatrix s1 = sigma1_matrix(n, qc), s2 = sigma2_matrix(n, qc);
    ExactMatrix d = d_matrix(n, qc);
    ExactMatrix a, b;
    if (spec.form() == LambdaForm::Raw) {
        ExactMatrix lam = ExactMatrix::diagonal(spec.lambda());
        a = s1 * lam;
        b = lam.sharp() * s2;
    } else {
        ExactMatrix lp = ExactMatrix::diagonal(spec.lambda_prime());
        a = s1 * d.sharp() * lp;
        b = lp.sharp() * d * s2;
    }
    return Representation{spec, a, b, s_matrix(n, qc), lambda_canonical(n, qc), d};
}

BraidReport verify_braid(const Representation& rep) {
    BraidReport r;
    const ExactMatrix &a = rep.sigma1, &b = rep.sigma2;
    const auto& lam = rep.spec.lambda();
    r.left = a * b * a;
    r.right = b * a * b;
    r.expected = (lam.front() * lam.back()) * (rep.s_matrix * ExactMatrix::diagonal(lam));
    r.relation = r.left == r.right;
    r.product = r.left == r.expected && r.right == r.expected;

    const QContext& qc = rep.spec.qc();
    long n = rep.spec.n();
    ExactMatrix s1 = sigma1_matrix(n, qc), s2 = sigma2_matrix(n, qc);
    ExactMatrix mid = s1 * rep.lambda_canonical * s2;
    ExactMatrix alt1 = rep.s_matrix * sigma1_inverse_closed(n, qc);
    ExactMatrix alt2 = sigma2_inverse_closed(n, qc) * rep.s_matrix;
    r.canonical = mid == alt1 && mid == alt2;

    r.pass = r.relation && r.product && r.canonical;
    if (!r.relation) {
        r.failed_check = "sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2";
        r.first = first_mismatch(r.left, r.right);
    } else if (!r.product) {
        r.failed_check = "sigma1 sigma2 sigma1 = lambda_0 lambda_n S(q) Lambda";
        r.first = first_mismatch(r.left, r.expected);
    } else if (!r.canonical) {
        r.failed_check = "sigma1(q) Lambda(q) sigma2(q) = S(q) sigma1^-1(q) = sigma2^-1(q) S(q)";
        r.first = mid != alt1 ? first_mismatch(mid, alt1) : first_mismatch(mid, alt2);
    }
    return r;
}

ExactMatrix unipotent_inverse(const ExactMatrix& x) {
    if (!x.square()) throw NonSquare("unipotent_inverse needs a square matrix");
    if (!x.is_unit_upper_triangular()) throw NotUnitUpperTriangular("matrix is not unit upper triangular");
    std::size_t n = x.rows();
    ExactMatrix y = ExactMatrix::identity(n, x.ctx());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m) {
            std::size_t inner = m - k - 1;
            Scalar total = Scalar::from_int(0, x.ctx());
            // Each mask picks the intermediate indices of one chain k < ... < m.
            for (unsigned long mask = 0; mask < (1ul << inner); ++mask) {
                Scalar term = Scalar::from_int(1, x.ctx());
                std::size_t prev = k, steps = 0;
                for (std::size_t i = 0; i < inner && !term.is_zero(); ++i)
                    if (mask & (1ul << i)) {
                        term *= x(prev, k + 1 + i);
                        prev = k + 1 + i;
                        ++steps;
                    }
                if (term.is_zero()) continue;
                term *= x(prev, m);
                ++steps;
                total += steps % 2 ? -term : term;
            }
            y(k, m) = total;
        }
    return y;
}

}  // namespace qbraid
