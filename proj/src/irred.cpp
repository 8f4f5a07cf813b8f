#include "qbraid/irred.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "qbraid/structure.hpp"

namespace qbraid {

namespace {

std::size_t dim(long n) { return static_cast<std::size_t>(n + 1); }

// Factored parameters lambda'_k = lambda_k / q_{n-k}, valid for raw and factored input.
std::vector<Scalar> factored_lambda(const RepSpec& spec) {
    std::vector<Scalar> lp;
    long n = spec.n();
    for (long k = 0; k <= n; ++k)
        lp.push_back(spec.lambda()[static_cast<std::size_t>(k)] / q_triangular_power(n - k, spec.qc()));
    return lp;
}

// Incremental row echelon basis over one field.
class Echelon {
public:
    explicit Echelon(const FieldContext& f) : f_(f) {}

    // Adds v when it is independent of the basis.
    bool add(std::vector<Scalar> v) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            Scalar k = c;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!rows_[i][j].is_zero()) v[j] -= k * rows_[i][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        Scalar inv = v[p].inv();
        for (auto& x : v) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    std::size_t size() const { return rows_.size(); }

private:
    FieldContext f_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<Scalar> flatten(const ExactMatrix& m) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

FieldContext joined(const std::vector<ExactMatrix>& ms) {
    FieldContext f;
    for (const auto& m : ms) f = join(f, m.ctx());
    return f;
}

Scalar factorial(long n, const FieldContext& f) {
    Scalar r = Scalar::from_int(1, f);
    for (long k = 2; k <= n; ++k) r *= Scalar::from_int(k, f);
    return r;
}

}  // namespace

ExactMatrix f_matrix(const RepSpec& spec, long r) {
    long n = spec.n();
    if (r < 0 || r > n / 2) throw ConstraintViolated("r must lie in 0..floor(n/2)");
    const QContext& qc = spec.qc();
    std::vector<Scalar> lp = factored_lambda(spec);
    Scalar mu = q_triangular_power(n - r, qc) * lp[static_cast<std::size_t>(r)];
    ExactMatrix d = d_matrix(n, qc);
    ExactMatrix div = d.sharp() * ExactMatrix::diagonal(lp);
    for (std::size_t k = 0; k < div.rows(); ++k)
        if (div(k, k).is_zero()) throw SingularDiagonal("D^sharp Lambda' has a zero diagonal entry");
    ExactMatrix fs = sigma1_matrix(n, qc) - mu * inverse(div);
    ExactMatrix f = fs.transpose_s();
    try {
        ExactMatrix viaexp = q_exp_nilpotent(t_q(n, qc), qc) - mu * inverse(d * ExactMatrix::diagonal(lp).sharp());
        if (viaexp != f) throw ConstraintViolated("F_{r,n} forms disagree");
    } catch (const QFactorialZero&) {
        // exp_(q) is undefined here; the sigma1 form stands alone
    }
    return f;
}

MinorSearch minor_criterion(const RepSpec& spec, long r) {
    long n = spec.n();
    ExactMatrix fs = f_matrix(spec, r).transpose_s();
    std::size_t k = static_cast<std::size_t>(n - r);
    IndexSubset cols;
    for (long j = r + 1; j <= n; ++j) cols.push_back(static_cast<std::size_t>(j));
    MinorSearch out;
    out.r = r;
    out.value = Scalar::from_int(0, fs.ctx());
    IndexSubset head;
    for (std::size_t i = 0; i < k; ++i) head.push_back(i);
    auto attempt = [&](const IndexSubset& rows) {
        ++out.tried;
        Scalar m = minor(fs, rows, cols);
        if (m.is_zero()) return false;
        out.witness = rows;
        out.value = m;
        return true;
    };
    if (attempt(head)) return out;
    for (const auto& rows : subsets(dim(n), k))
        if (rows != head && attempt(rows)) return out;
    return out;
}

LinearSpace commutant(const std::vector<ExactMatrix>& gens) {
    IntertwinerReport r = intertwiner_space(gens, gens);
    return r.space;
}

LinearSpace commutant(const Representation& rep) { return commutant({rep.sigma1, rep.sigma2}); }

std::size_t commutant_dimension(const Representation& rep) { return commutant(rep).dim; }

std::size_t burnside_dimension(const std::vector<ExactMatrix>& gens) {
    if (gens.empty()) return 1;
    FieldContext f = joined(gens);
    std::vector<ExactMatrix> g;
    for (const auto& m : gens) g.push_back(m.coerce(f));
    std::size_t n = g[0].rows();
    Echelon span(f);
    std::deque<ExactMatrix> queue;
    ExactMatrix id = ExactMatrix::identity(n, f);
    span.add(flatten(id));
    queue.push_back(id);
    while (!queue.empty() && span.size() < n * n) {
        ExactMatrix x = queue.front();
        queue.pop_front();
        for (const auto& m : g) {
            ExactMatrix y = m * x;
            if (span.add(flatten(y))) queue.push_back(y);
        }
    }
    return span.size();
}

std::size_t burnside_dimension(const Representation& rep) { return burnside_dimension({rep.sigma1, rep.sigma2}); }

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::OperatorIrreducible: return "operator-irreducible";
        case Verdict::OperatorReducible: return "operator-reducible";
        case Verdict::SubspaceReducibleWitnessed: return "subspace-reducible-witnessed";
        case Verdict::Inconclusive: break;
    }
    return "inconclusive";
}

bool IrreducibilityReport::minors_all_witnessed() const {
    for (const auto& m : per_r)
        if (m.exhausted()) return false;
    return true;
}

IrreducibilityReport analyze(const Representation& rep) {
    IrreducibilityReport out;
    long n = rep.spec.n();
    out.n = n;
    for (long r = 0; r <= n / 2; ++r) out.per_r.push_back(minor_criterion(rep.spec, r));
    out.commutant_dim = commutant_dimension(rep);
    out.burnside_dim = burnside_dimension(rep);
    std::size_t full = dim(n) * dim(n);
    if (out.commutant_dim > 1)
        out.verdict = Verdict::OperatorReducible;
    else if (out.burnside_dim < full)
        out.verdict = Verdict::SubspaceReducibleWitnessed;
    else if (out.minors_all_witnessed())
        out.verdict = Verdict::OperatorIrreducible;
    else
        out.verdict = Verdict::Inconclusive;
    return out;
}

std::vector<SuspectedCatalogEntry> suspected_catalog(long n, const Scalar& lambda0) {
    if (n < 2) throw ConstraintViolated("suspected catalog needs n >= 2");
    std::vector<std::pair<long, int>> points;
    auto push = [&](long s) {
        points.push_back({s, 1});
        if (s > 2) points.push_back({s, -1});
    };
    push(n);
    if (n % 2 == 0 && n / 2 >= 2) push(n / 2);
    std::vector<SuspectedCatalogEntry> out;
    for (auto [s, sign] : points) {
        FieldContext f = s == 2 ? FieldContext() : FieldContext::make(static_cast<int>(s), false);
        if (!lambda0.is_zero()) f = join(f, lambda0.ctx());
        Scalar l0 = lambda0.is_zero() ? Scalar::from_int(1, f) : lambda0.coerce(f);
        SuspectedCatalogEntry e;
        e.n = n;
        e.s = s;
        e.sign = sign;
        for (long k = 0; k <= n; ++k) {
            long e_k = ((sign * k) % s + s) % s;
            Scalar z = s == 2 ? Scalar::from_int(e_k == 0 ? 1 : -1, f) : Scalar::zeta(static_cast<int>(s), f, e_k);
            e.lambda.push_back(l0 * z);
        }
        e.lambda = unify(e.lambda);
        out.push_back(std::move(e));
    }
    return out;
}

RepSpec catalog_spec(const SuspectedCatalogEntry& e) {
    return RepSpec::raw(e.n, QContext::at(Scalar::from_int(1, FieldContext())), e.lambda);
}

Scalar d0_determinant(const std::vector<Scalar>& lambda) {
    if (lambda.size() < 3) throw ConstraintViolated("D_n^(0) needs n >= 2");
    std::vector<Scalar> lam = unify(lambda);
    long n = static_cast<long>(lam.size()) - 1;
    for (const auto& x : lam)
        if (x.is_zero()) throw ConstraintViolated("lambda entries must be nonzero");
    FieldContext f = lam[0].ctx();
    ExactMatrix m = sigma1_matrix(n, QContext::at(Scalar::from_int(1, f)));
    for (long k = 0; k <= n; ++k) {
        auto i = static_cast<std::size_t>(k);
        m(i, i) -= lam[0] / lam[i];
    }
    IndexSubset rows, cols;
    for (long k = 0; k < n; ++k) {
        rows.push_back(static_cast<std::size_t>(k));
        cols.push_back(static_cast<std::size_t>(k + 1));
    }
    return minor(m, rows, cols);
}

std::vector<std::pair<IndexSubset, Scalar>> d0_nu_expansion(long n) {
    if (n < 2) throw ConstraintViolated("D_n^(0) needs n >= 2");
    FieldContext f;
    ExactMatrix s = sigma1_matrix(n, QContext::at(Scalar::from_int(1, f)));
    IndexSubset rows, cols;
    for (long k = 0; k < n; ++k) {
        rows.push_back(static_cast<std::size_t>(k));
        cols.push_back(static_cast<std::size_t>(k + 1));
    }
    std::size_t m = static_cast<std::size_t>(n - 1);
    // D is multilinear in nu_1..nu_{n-1}: evaluate on 0/1 points and invert.
    std::vector<Scalar> at(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < at.size(); ++mask) {
        ExactMatrix x = s;
        x(0, 0) -= Scalar::from_int(1, f);
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) x(i + 1, i + 1) -= Scalar::from_int(1, f);
        at[mask] = minor(x, rows, cols);
    }
    std::vector<std::pair<IndexSubset, Scalar>> out;
    for (std::size_t mask = 1; mask < at.size(); ++mask) {
        Scalar a = Scalar::from_int(0, f);
        for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
            int odd = __builtin_popcountll(mask ^ sub) % 2;
            a += odd ? -at[sub] : at[sub];
            if (sub == 0) break;
        }
        if (a.is_zero()) continue;
        IndexSubset idx;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) idx.push_back(i + 1);
        out.push_back({idx, a});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    return out;
}

Scalar d0_starred_closed_form(const std::vector<Scalar>& lambda) {
    if (lambda.size() < 3) throw ConstraintViolated("D_n^(0) needs n >= 2");
    std::vector<Scalar> lam = unify(lambda);
    long n = static_cast<long>(lam.size()) - 1;
    auto at = [&](long k) -> const Scalar& { return lam[static_cast<std::size_t>(k)]; };
    for (const auto& x : lam)
        if (x.is_zero()) throw ConstraintViolated("lambda entries must be nonzero");
    Scalar c = at(0) * at(n);
    for (long r = 1; r < n; ++r)
        if (at(r) * at(n - r) != c)
            throw ConstraintViolated("starred condition fails: lambda_" + std::to_string(r) + " lambda_" + std::to_string(n - r) +
                                     " != lambda_0 lambda_n");
    if (at(n) != at(0)) throw ConstraintViolated("starred condition requires lambda_n = lambda_0");
    FieldContext f = lam[0].ctx();
    Scalar sum = Scalar::from_int(0, f), prod = Scalar::from_int(1, f);
    for (long k = 0; k < n; ++k) sum += at(k);
    for (long k = 1; k < n; ++k) prod *= at(k);
    if (n == 4 && at(2) == -at(0)) sum = at(0) + at(2);
    return factorial(n - 1, f) * at(0).pow(n - 2) * sum / prod;
}

bool d0_starred_check(const std::vector<Scalar>& lambda) {
    return d0_determinant(lambda) == d0_starred_closed_form(lambda);
}

EigenForms eigenvector_closed_forms(const Scalar& alpha, long n) {
    if (n < 0) throw ConstraintViolated("n must be nonnegative");
    FieldContext f = alpha.ctx();
    Scalar one = Scalar::from_int(1, f);
    if (alpha.is_zero() || alpha == one) throw AlphaDegenerate("alpha must differ from 0 and 1");
    EigenForms out;
    Scalar a = one - alpha, b = one - alpha.inv();
    std::vector<Scalar> lam;
    for (long k = 0; k <= n; ++k) {
        out.e0.push_back(a.pow(-(n - k)));
        out.f0.push_back(b.pow(n - k));
        lam.push_back(alpha.pow(n - k));
    }
    QContext q1 = QContext::at(one);
    ExactMatrix l = ExactMatrix::diagonal(lam);
    out.e0_fixed = mat_vec(sigma1_matrix(n, q1) * l, out.e0) == out.e0;
    out.f0_fixed = mat_vec(l.sharp() * sigma2_matrix(n, q1), out.f0) == out.f0;
    return out;
}

FixedVectorReport fixed_vector_check(const Representation& rep, const std::vector<Scalar>& v) {
    if (v.size() != rep.sigma1.rows()) throw ShapeMismatch("vector length differs from the representation dimension");
    std::vector<Scalar> w = unify(v, rep.sigma1.ctx());
    FieldContext f = w.empty() ? rep.sigma1.ctx() : w[0].ctx();
    FixedVectorReport out;
    out.sigma1_fixed = mat_vec(rep.sigma1.coerce(f), w) == w;
    out.sigma2_fixed = mat_vec(rep.sigma2.coerce(f), w) == w;
    return out;
}

SubspaceWitness root_of_unity_reducibility(long n, const Scalar& q) {
    if (n < 2) throw ConstraintViolated("root_of_unity_reducibility needs n >= 2");
    QContext qc = QContext::at(q);
    if (!q_int(n, qc).is_zero()) throw NotAReduciblePoint("(" + std::to_string(n) + ")_q is nonzero at q = " + q.str());
    std::vector<Scalar> ones(dim(n), Scalar::from_int(1, q.ctx()));
    Representation rep = build_representation(RepSpec::factored(n, qc, ones));
    SubspaceWitness out;
    out.n = n;
    out.q = q;
    FieldContext f = rep.sigma1.ctx();
    for (long k = 1; k < n; ++k) {
        std::vector<Scalar> e(dim(n), Scalar::from_int(0, f));
        e[static_cast<std::size_t>(k)] = Scalar::from_int(1, f);
        out.basis.push_back(e);
    }
    out.invariant = true;
    for (const auto* m : {&rep.sigma1, &rep.sigma2})
        for (const auto& e : out.basis) {
            auto img = mat_vec(*m, e);
            if (!img.front().is_zero() || !img.back().is_zero()) out.invariant = false;
        }
    return out;
}

SubspaceWitness root_of_unity_reducibility(long n, long s) {
    if (s < 1) throw ConstraintViolated("root order must be positive");
    Scalar q = s <= 2 ? Scalar::from_int(s == 1 ? 1 : -1, FieldContext())
                      : Scalar::zeta(static_cast<int>(s), FieldContext::make(static_cast<int>(s), false));
    return root_of_unity_reducibility(n, q);
}

N1Verdict n1_subspace_test(const Scalar& lambda0, const Scalar& lambda1) {
    std::vector<Scalar> lam = unify({lambda0, lambda1});
    if (lam[0].is_zero() || lam[1].is_zero()) throw ConstraintViolated("lambda entries must be nonzero");
    Scalar alpha = lam[1] / lam[0];
    Scalar one = Scalar::from_int(1, alpha.ctx());
    N1Verdict out;
    out.reducible = (alpha * alpha - alpha + one).is_zero();
    Representation rep = build_representation(RepSpec::raw(1, QContext::at(one), lam));
    out.burnside_dim = burnside_dimension(rep);
    out.consistent = out.reducible == (out.burnside_dim < 4);
    return out;
}

IntertwinerReport intertwiner_space(const std::vector<ExactMatrix>& a, const std::vector<ExactMatrix>& b) {
    if (a.size() != b.size() || a.empty()) throw ShapeMismatch("intertwiner needs matching generator lists");
    std::vector<ExactMatrix> all = a;
    all.insert(all.end(), b.begin(), b.end());
    FieldContext f = joined(all);
    std::size_t n = a[0].rows(), m = b[0].rows();
    for (const auto& x : a)
        if (x.rows() != n || x.cols() != n) throw ShapeMismatch("generators must be square of one size");
    for (const auto& x : b)
        if (x.rows() != m || x.cols() != m) throw ShapeMismatch("generators must be square of one size");
    // Unknown C is n x m, entry (k, j) at index k m + j.
    ExactMatrix sys(a.size() * n * m, n * m, f);
    std::size_t row = 0;
    for (std::size_t g = 0; g < a.size(); ++g) {
        ExactMatrix x = a[g].coerce(f), y = b[g].coerce(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j, ++row) {
                for (std::size_t k = 0; k < n; ++k) sys(row, k * m + j) += x(i, k);
                for (std::size_t k = 0; k < m; ++k) sys(row, i * m + k) -= y(k, j);
            }
    }
    IntertwinerReport out;
    for (const auto& v : nullspace(sys)) {
        ExactMatrix c(n, m, f);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < m; ++j) c(k, j) = v[k * m + j];
        out.space.basis.push_back(c);
    }
    out.space.dim = out.space.basis.size();
    if (n != m || out.space.dim == 0) return out;
    for (const auto& c : out.space.basis)
        if (!determinant(c).is_zero()) {
            out.invertible = c;
            return out;
        }
    // Deterministic combinations sum c_i B_i.
    std::vector<std::function<long(std::size_t)>> tuples = {
        [](std::size_t) { return 1L; },
        [](std::size_t i) { return static_cast<long>(i + 1); },
        [](std::size_t i) { return i % 2 ? -1L : 1L; },
        [](std::size_t i) { return 1L << std::min<std::size_t>(i, 20); },
        [](std::size_t i) { return static_cast<long>((i + 1) * (i + 1)) + 3; },
    };
    for (const auto& t : tuples) {
        ExactMatrix c(n, n, f);
        for (std::size_t i = 0; i < out.space.dim; ++i) c = c + Scalar::from_int(t(i), f) * out.space.basis[i];
        if (!determinant(c).is_zero()) {
            out.invertible = c;
            return out;
        }
    }
    return out;
}

IntertwinerReport intertwiner_space(const Representation& a, const Representation& b) {
    return intertwiner_space({a.sigma1, a.sigma2}, {b.sigma1, b.sigma2});
}

}  // namespace qbraid
