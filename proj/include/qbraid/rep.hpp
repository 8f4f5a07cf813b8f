#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbraid/matrix.hpp"
#include "qbraid/qcomb.hpp"

namespace qbraid {

// sigma1(q,n)_{km} = C_{n-k}^{n-m}(q)
ExactMatrix sigma1_matrix(long n, const QContext& qc);
// (-1)^{k+m} q_{m-k} C_{n-k}^{n-m}(q)
ExactMatrix sigma1_inverse_closed(long n, const QContext& qc);
// (-1)^{k+m} q_{k-m}^{-1} C_k^m(q^{-1})
ExactMatrix sigma2_matrix(long n, const QContext& qc);
// (sigma1^{-1}(q^{-1}))^sharp, built from the Gauss-Jordan inverse
ExactMatrix sigma2_via_involution(long n, const QContext& qc);
// C_k^m(q^{-1})
ExactMatrix sigma2_inverse_closed(long n, const QContext& qc);

// S(q)_{km} = q_k^{-1} (-1)^k delta_{k+m,n}
ExactMatrix s_matrix(long n, const QContext& qc);
// diag(q_r q_{n-r} / q_n)
ExactMatrix lambda_canonical(long n, const QContext& qc);
// diag(q_r)
ExactMatrix d_matrix(long n, const QContext& qc);
// Lambda(q) = q_n^{-1} D D^sharp and S(q) = D^{-1} S(1).
bool canonical_identities_hold(long n, const QContext& qc);

enum class LambdaForm { Raw, Factored };

class RepSpec {
public:
    // Lambda = diag(lambda), checked against cond_q.
    static RepSpec raw(long n, const QContext& qc, const std::vector<Scalar>& lambda);
    // Lambda = D^sharp(q) diag(lambda_prime) with lambda'_k lambda'_{n-k} = c := lambda'_0 lambda'_n.
    static RepSpec factored(long n, const QContext& qc, const std::vector<Scalar>& lambda_prime);

    long n() const { return n_; }
    const QContext& qc() const { return qc_; }
    const FieldContext& field() const { return qc_.field(); }
    LambdaForm form() const { return form_; }
    // The effective diagonal Lambda in raw form (D^sharp Lambda' for factored specs).
    const std::vector<Scalar>& lambda() const { return lambda_; }
    // Only meaningful for factored specs.
    const std::vector<Scalar>& lambda_prime() const { return lambda_prime_; }
    const Scalar& c() const { return c_; }

private:
    RepSpec(long n, QContext qc) : n_(n), qc_(std::move(qc)) {}
    long n_;
    QContext qc_;
    LambdaForm form_ = LambdaForm::Raw;
    std::vector<Scalar> lambda_, lambda_prime_;
    Scalar c_;
};

struct Representation {
    RepSpec spec;
    ExactMatrix sigma1, sigma2;
    ExactMatrix s_matrix, lambda_canonical, d_matrix;
};

Representation build_representation(const RepSpec& spec);

struct BraidReport {
    bool pass = false;
    bool relation = false;   // s1 s2 s1 = s2 s1 s2
    bool product = false;    // both sides equal lambda_0 lambda_n S(q) Lambda
    bool canonical = false;  // s1(q) Lambda(q) s2(q) = S(q) s1^{-1}(q) = s2^{-1}(q) S(q)
    std::string failed_check;
    std::optional<Mismatch> first;
    ExactMatrix left, right, expected;
};

BraidReport verify_braid(const Representation& rep);

// Inverse of a unit upper-triangular matrix as the alternating sum over
// index chains k = i_0 < i_1 < ... < i_j = m of (-1)^j x_{i_0 i_1} ... x_{i_{j-1} i_j}.
ExactMatrix unipotent_inverse(const ExactMatrix& x);

}  // namespace qbraid
