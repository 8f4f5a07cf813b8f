#pragma once

#include <string>
#include <vector>

#include "qbraid/scalar.hpp"

namespace qbraid {

// The deformation parameter: either the indeterminate q of a symbolic field
// or a concrete nonzero field element.
class QContext {
public:
    // q is the indeterminate of base(q).
    static QContext symbolic(const FieldContext& base = FieldContext());
    // Throws ZeroQ when q0 = 0.
    static QContext at(const Scalar& q0);

    const Scalar& q() const { return q_; }
    const FieldContext& field() const { return q_.ctx(); }
    bool is_indeterminate() const { return indeterminate_; }

    Scalar zero() const { return Scalar::from_int(0, field()); }
    Scalar one() const { return Scalar::from_int(1, field()); }
    Scalar from_int(long v) const { return Scalar::from_int(v, field()); }
    Scalar power(long e) const;
    // Integer Laurent polynomial read at this q.
    Scalar eval(const QPoly& p) const;
    // The context with q replaced by q^{-1}.
    QContext inverted() const;
    // The same q seen in a larger field.
    QContext lift(const FieldContext& target) const;

private:
    QContext(Scalar q, bool ind) : q_(std::move(q)), indeterminate_(ind) {}
    Scalar q_;
    bool indeterminate_ = false;
};

// Integer polynomials in q.
QPoly q_int_poly(long n);
QPoly q_factorial_poly(long n);
// Gaussian polynomial by the factorial quotient with exact division.
QPoly q_binomial_poly(long n, long k);

Scalar q_int(long n, const QContext& qc);
Scalar q_factorial(long n, const QContext& qc);
// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})
Scalar q_pochhammer(const Scalar& a, long n, const QContext& qc);
// q_n = q^{n(n-1)/2}, defined for every integer n.
Scalar q_triangular_power(long n, const QContext& qc);
// q_{rn} = q_r q_{n-r} / q_n. Throws Error if it differs from q^{-(n-r)r}.
Scalar q_rn(long r, long n, const QContext& qc);

Scalar q_binomial(long n, long k, const QContext& qc);

enum class Recursion { First, Second };
// C_{n+1}^k = C_n^{k-1} + q^k C_n^k (first) or q^{n-k+1} C_n^{k-1} + C_n^k (second).
Scalar q_binomial_recursive(long n, long k, const QContext& qc, Recursion variant);

struct QTriangleRow {
    long n = 0;
    std::vector<Scalar> entries;
};
QTriangleRow triangle_row(long n, const QContext& qc);

// Coefficients of (1+x)(1+xq)...(1+xq^{k-1}) by direct expansion.
std::vector<Scalar> gauss_expand(long k, const QContext& qc);

enum class Identity { Bin1q, Bin2q, QSymmetry, ClassicalBin1, ClassicalBin2 };
std::string identity_name(Identity id);
Identity identity_from_name(const std::string& name);

struct IdentityReport {
    Identity id = Identity::Bin1q;
    long n = 0;
    bool pass = true;
    long instances = 0;
    std::string first_failure;  // index tuple and both sides when pass is false
};

// Checks every index instance of the identity at the given n. The classical
// identities ignore qc.
IdentityReport verify_identity(Identity id, long n, const QContext& qc);

}  // namespace qbraid
