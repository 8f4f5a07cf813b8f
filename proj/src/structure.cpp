#include "qbraid/structure.hpp"

#include <cctype>

#include "qbraid/rep.hpp"

namespace qbraid {

namespace {

std::size_t dim(long n) { return static_cast<std::size_t>(n + 1); }

void require_strictly_upper(const ExactMatrix& t) {
    if (!t.square()) throw NonSquare("series needs a square matrix");
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!t(i, j).is_zero()) throw ConstraintViolated("matrix is not strictly upper triangular");
}


}  // namespace

RelationReport compare(const ExactMatrix& left, const ExactMatrix& right) {
    RelationReport r;
    r.first = first_mismatch(left, right);
    r.pass = !r.first.has_value();
    return r;
}

ExactMatrix t_classical(long n, const FieldContext& f) {
    ExactMatrix t(dim(n), dim(n), f);
    for (long k = 0; k < n; ++k) t(static_cast<std::size_t>(k), static_cast<std::size_t>(k + 1)) = Scalar::from_int(k + 1, f);
    return t;
}

ExactMatrix t_q(long n, const QContext& qc) {
    ExactMatrix t(dim(n), dim(n), qc.field());
    for (long k = 0; k < n; ++k) t(static_cast<std::size_t>(k), static_cast<std::size_t>(k + 1)) = q_int(k + 1, qc);
    return t;
}

ExactMatrix q_exp_nilpotent(const ExactMatrix& t, const QContext& qc) {
    require_strictly_upper(t);
    ExactMatrix x = t.coerce(join(t.ctx(), qc.field()));
    ExactMatrix sum = ExactMatrix::identity(x.rows(), x.ctx());
    ExactMatrix power = sum;
    for (std::size_t m = 1; m < x.rows(); ++m) {
        power = power * x;
        if (power.is_zero()) break;
        Scalar f = q_factorial(static_cast<long>(m), qc.lift(x.ctx()));
        if (f.is_zero())
            throw QFactorialZero("(" + std::to_string(m) + ")!_q vanishes at q = " + qc.q().str() +
                                 " while T^" + std::to_string(m) + " is nonzero");
        sum = sum + f.inv() * power;
    }
    return sum;
}

ExactMatrix exp_nilpotent(const ExactMatrix& t) {
    require_strictly_upper(t);
    ExactMatrix sum = ExactMatrix::identity(t.rows(), t.ctx());
    ExactMatrix power = sum;
    Scalar fact = Scalar::from_int(1, t.ctx());
    for (std::size_t m = 1; m < t.rows(); ++m) {
        power = power * t;
        if (power.is_zero()) break;
        fact *= Scalar::from_int(static_cast<long>(m), t.ctx());
        sum = sum + fact.inv() * power;
    }
    return sum;
}

ExactMatrix unipotent_log(const ExactMatrix& u) {
    if (!u.square()) throw NonSquare("log needs a square matrix");
    if (!u.is_unit_upper_triangular()) throw NotUnitUpperTriangular("log needs a unit upper-triangular matrix");
    ExactMatrix nil = u - ExactMatrix::identity(u.rows(), u.ctx());
    ExactMatrix sum(u.rows(), u.cols(), u.ctx());
    ExactMatrix power = ExactMatrix::identity(u.rows(), u.ctx());
    for (std::size_t r = 1; r < u.rows(); ++r) {
        power = power * nil;
        if (power.is_zero()) break;
        Scalar c = Scalar::from_int(r % 2 ? 1 : -1, u.ctx()) / Scalar::from_int(static_cast<long>(r), u.ctx());
        sum = sum + c * power;
    }
    return sum;
}

ExactMatrix symmetric_power(const ExactMatrix& m, long n) {
    if (m.rows() != 2 || m.cols() != 2) throw ShapeMismatch("symmetric_power needs a 2x2 matrix");
    const FieldContext& f = m.ctx();
    std::size_t words = std::size_t{1} << n;
    auto popcount = [](std::size_t w) { return static_cast<long>(__builtin_popcountl(w)); };
    // Tensor word w: bit (n-1-p) is the index of factor p, so e_k has its
    // ones in the lowest k bits.
    ExactMatrix out(dim(n), dim(n), f);
    for (long k = 0; k <= n; ++k) {
        std::vector<Scalar> v(words, Scalar::from_int(0, f));
        for (std::size_t w = 0; w < words; ++w)
            if (popcount(w) == k) v[w] = Scalar::from_int(1, f);
        // Apply M to each tensor factor in turn.
        for (long p = 0; p < n; ++p) {
            std::size_t bit = std::size_t{1} << (n - 1 - p);
            std::vector<Scalar> next(words, Scalar::from_int(0, f));
            for (std::size_t w = 0; w < words; ++w) {
                if (v[w].is_zero()) continue;
                std::size_t c = (w & bit) ? 1 : 0;
                for (std::size_t r = 0; r < 2; ++r) {
                    const Scalar& e = m(r, c);
                    if (e.is_zero()) continue;
                    std::size_t target = r ? (w | bit) : (w & ~bit);
                    next[target] += e * v[w];
                }
            }
            v = std::move(next);
        }
        for (long j = 0; j <= n; ++j) {
            std::size_t rep = (std::size_t{1} << j) - 1;
            out(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = v[rep];
        }
    }
    return out;
}

ExactMatrix ferrand_phi(long n, const QContext& qc) { return d_matrix(n, qc) * sigma1_matrix(n, qc).transpose_s(); }

ExactMatrix ferrand_psi(long n, const QContext& qc) {
    return sigma2_matrix(n, qc).transpose_s() * d_matrix(n, qc).transpose_s();
}

ExactMatrix ferrand_phi_action(long n, const QContext& qc) {
    // X^k -> (1+X)(1+qX)...(1+q^{k-1}X)
    ExactMatrix out(dim(n), dim(n), qc.field());
    for (long k = 0; k <= n; ++k) {
        auto c = gauss_expand(k, qc);
        for (long r = 0; r <= k; ++r) out(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = c[static_cast<std::size_t>(r)];
    }
    return out;
}

ExactMatrix ferrand_psi_action(long n, const QContext& qc) {
    // X^k -> q_{n-k} (1-X)^{n-k}_{q^{-1}} X^k
    QContext qi = qc.inverted();
    ExactMatrix out(dim(n), dim(n), qc.field());
    for (long k = 0; k <= n; ++k) {
        auto c = gauss_expand(n - k, qi);
        Scalar lead = q_triangular_power(n - k, qc);
        for (long s = 0; s <= n - k; ++s) {
            Scalar v = lead * c[static_cast<std::size_t>(s)];
            if (s % 2) v = -v;
            out(static_cast<std::size_t>(s + k), static_cast<std::size_t>(k)) = v;
        }
    }
    return out;
}

RelationReport verify_braid_like(const ExactMatrix& a, const ExactMatrix& b) { return compare(a * b * a, b * a * b); }

TWParams tw_default_five() {
    QContext qc = QContext::symbolic();
    TWParams p;
    p.d = 5;
    p.lambda = {qc.one(), qc.power(-1), qc.power(-2), qc.power(-2), qc.one()};
    p.gamma = qc.power(-1);
    return p;
}

TWMatrices tw_matrices(const TWParams& p) {
    if (p.d < 2 || p.d > 5) throw UnsupportedDimension("normal forms exist for dimensions 2..5, got " + std::to_string(p.d));
    if (static_cast<long>(p.lambda.size()) != p.d)
        throw ShapeMismatch("dimension " + std::to_string(p.d) + " needs " + std::to_string(p.d) + " eigenvalues");
    std::vector<Scalar> all = p.lambda;
    if (p.D) all.push_back(*p.D);
    if (p.gamma) all.push_back(*p.gamma);
    all = unify(all);
    for (std::size_t i = 0; i < p.lambda.size(); ++i)
        if (all[i].is_zero()) throw ConstraintViolated("lambda_" + std::to_string(i + 1) + " is zero");
    const FieldContext f = all[0].ctx();
    auto l = [&](int i) { return all[static_cast<std::size_t>(i - 1)]; };
    Scalar zero = Scalar::from_int(0, f), one = Scalar::from_int(1, f);
    auto rows = [](std::vector<std::vector<Scalar>> r) { return ExactMatrix::from_rows(r); };

    TWMatrices m;
    if (p.d == 2) {
        m.sigma1 = rows({{l(1), l(1)}, {zero, l(2)}});
        m.sigma2 = rows({{l(2), zero}, {-l(2), l(1)}});
    } else if (p.d == 3) {
        Scalar x = l(1) * l(3) / l(2) + l(2);
        m.sigma1 = rows({{l(1), x, l(2)}, {zero, l(2), l(2)}, {zero, zero, l(3)}});
        m.sigma2 = rows({{l(3), zero, zero}, {-l(2), l(2), zero}, {l(2), -x, l(1)}});
    } else if (p.d == 4) {
        if (!p.D) throw ConstraintViolated("dimension 4 needs D");
        Scalar D = all[4];
        if (D.is_zero()) throw ConstraintViolated("D is zero");
        Scalar Di = D.inv();
        Scalar a = one + Di + Di * Di, b = one + Di;
        m.sigma1 = rows({{l(1), a * l(2), a * l(3), l(4)},
                         {zero, l(2), b * l(3), l(4)},
                         {zero, zero, l(3), l(4)},
                         {zero, zero, zero, l(4)}});
        Scalar D2 = D * D, D3 = D2 * D;
        m.sigma2 = rows({{l(4), zero, zero, zero},
                         {-l(3), l(3), zero, zero},
                         {D * l(2), -(D + one) * l(2), l(2), zero},
                         {-D3 * l(1), (D3 + D2 + D) * l(1), -(D2 + D + one) * l(1), l(1)}});
    } else {
        if (!p.gamma) throw ConstraintViolated("dimension 5 needs gamma");
        Scalar g = all.back();
        if (g.is_zero()) throw ConstraintViolated("gamma is zero");
        Scalar g2 = g * g, g3 = g2 * g;
        Scalar t = g3 / (l(1) * l(5));
        Scalar u = g2 / l(3) + l(3) + g;
        m.sigma1 = rows({{l(1), (one + g2 / (l(2) * l(4))) * (l(2) + g3 / (l(3) * l(4))),
                          u * (one + l(1) * l(5) / g2), (one + l(2) * l(4) / g2) * (l(3) + g3 / (l(2) * l(4))), t},
                         {zero, l(2), u, t + l(3) + g, t},
                         {zero, zero, l(3), t + l(3), t},
                         {zero, zero, zero, l(4), l(4)},
                         {zero, zero, zero, zero, l(5)}});
    }
    return m;
}

TWReport tw_equivalence_check(const TWParams& p) {
    TWMatrices tw = tw_matrices(p);
    const FieldContext f = tw.sigma1.ctx();
    std::vector<Scalar> lam;
    for (const Scalar& x : p.lambda) lam.push_back(x.coerce(f));
    auto l = [&](int i) { return lam[static_cast<std::size_t>(i - 1)]; };
    Scalar one = Scalar::from_int(1, f);

    TWReport r;
    r.d = p.d;
    long n = p.d - 1;
    auto add = [&](const std::string& name, const ExactMatrix& left, const ExactMatrix& right) {
        auto mm = first_mismatch(left, right);
        r.checks.emplace_back(name, !mm);
        if (mm && !r.first) r.first = mm;
    };

    if (p.d == 2) {
        r.q = one;
        Representation rep = build_representation(RepSpec::raw(n, QContext::at(one), lam));
        ExactMatrix L = ExactMatrix::diagonal(lam);
        r.conjugator = L;
        ExactMatrix Li = inverse(L);
        add("Lambda^-1 sigma1^lambda Lambda = sigma1^Lambda", Li * tw.sigma1 * L, rep.sigma1);
        add("Lambda^-1 sigma2^lambda Lambda = sigma2^Lambda", Li * *tw.sigma2 * L, rep.sigma2);
    } else if (p.d == 3) {
        r.q = l(1) * l(3) / (l(2) * l(2));
        Representation rep = build_representation(RepSpec::raw(n, QContext::at(r.q), lam));
        ExactMatrix C = ExactMatrix::diagonal({one, one, l(3) / l(2)});
        r.conjugator = C;
        ExactMatrix Ci = inverse(C);
        add("sigma1^lambda = C sigma1^Lambda C^-1", tw.sigma1, C * rep.sigma1 * Ci);
        add("sigma2^lambda = C sigma2^Lambda C^-1", *tw.sigma2, C * rep.sigma2 * Ci);
    } else if (p.d == 4) {
        Scalar D = p.D->coerce(f);
        if (D * D != l(2) * l(3) / (l(1) * l(4)))
            throw ConstraintViolated("D^2 = " + (D * D).str() + " differs from lambda_2 lambda_3/(lambda_1 lambda_4) = " +
                                     (l(2) * l(3) / (l(1) * l(4))).str());
        r.q = D.inv();
        Representation rep = build_representation(RepSpec::raw(n, QContext::at(r.q), lam));
        r.conjugator = ExactMatrix::identity(4, f);
        add("sigma1^lambda = sigma1(q) Lambda", tw.sigma1, rep.sigma1);
        add("sigma2^lambda = Lambda^# sigma2(q)", *tw.sigma2, rep.sigma2);
    } else {
        Scalar g = p.gamma->coerce(f);
        Scalar prod = one;
        for (const Scalar& x : lam) prod *= x;
        if (g.pow(5) != prod) throw ConstraintViolated("gamma^5 = " + g.pow(5).str() + " differs from the product " + prod.str());
        r.q = l(2) * l(4) / (l(3) * l(3));
        if (r.q.pow(-3) != l(2) * l(4) / (l(1) * l(5)))
            throw ConstraintViolated("q^-3 differs from lambda_2 lambda_4/(lambda_1 lambda_5) for q = " + r.q.str());
        if (r.q.pow(-4) != l(3) * l(3) / (l(1) * l(5)))
            throw ConstraintViolated("q^-4 differs from lambda_3^2/(lambda_1 lambda_5) for q = " + r.q.str());
        Representation rep = build_representation(RepSpec::raw(n, QContext::at(r.q), lam));
        Scalar qi = r.q.inv();
        ExactMatrix C = ExactMatrix::diagonal({one, one, one, qi * l(3) / l(4), qi * l(3) / l(5)});
        r.conjugator = C;
        add("sigma1^lambda = C^-1 sigma1^Lambda C", tw.sigma1, inverse(C) * rep.sigma1 * C);
    }
    r.pass = !r.checks.empty();
    for (const auto& c : r.checks) r.pass = r.pass && c.second;
    return r;
}

ExactMatrix sl2_projection(const std::vector<int>& word) {
    FieldContext f;
    ExactMatrix a = ExactMatrix::from_ints({{1, 1}, {0, 1}}, f);
    ExactMatrix b = ExactMatrix::from_ints({{1, 0}, {-1, 1}}, f);
    ExactMatrix ai = ExactMatrix::from_ints({{1, -1}, {0, 1}}, f);
    ExactMatrix bi = ExactMatrix::from_ints({{1, 0}, {1, 1}}, f);
    ExactMatrix r = ExactMatrix::identity(2, f);
    for (int letter : word) {
        switch (letter) {
            case 1: r = r * a; break;
            case 2: r = r * b; break;
            case -1: r = r * ai; break;
            case -2: r = r * bi; break;
            default: throw Error("braid letter must be 1, 2, -1 or -2");
        }
    }
    return r;
}

std::vector<int> parse_braid_word(const std::string& text) {
    // Accepts letters such as "s1 s2 s1^-1" or "s1,s2"; an empty string is the empty word.
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == '*'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != 's') throw ParseError("expected 's1' or 's2'", i);
        ++i;
        if (i >= text.size() || (text[i] != '1' && text[i] != '2')) throw ParseError("expected generator index 1 or 2", i);
        int g = text[i] - '0';
        ++i;
        if (text.compare(i, 3, "^-1") == 0) {
            g = -g;
            i += 3;
        }
        out.push_back(g);
        skip();
    }
    return out;
}

}  // namespace qbraid
