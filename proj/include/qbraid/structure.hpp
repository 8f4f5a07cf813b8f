#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbraid/matrix.hpp"
#include "qbraid/qcomb.hpp"

namespace qbraid {

// Outcome of a matrix equation check.
struct RelationReport {
    bool pass = false;
    std::optional<Mismatch> first;
};
RelationReport compare(const ExactMatrix& left, const ExactMatrix& right);

// T_1 and T_(q) truncated to indices 0..n: sum (k+1) E_{k,k+1} and sum (k+1)_q E_{k,k+1}.
ExactMatrix t_classical(long n, const FieldContext& f = FieldContext());
ExactMatrix t_q(long n, const QContext& qc);

// sum_m T^m / (m)!_q for strictly upper-triangular T. Throws QFactorialZero
// when (m)!_q vanishes while T^m does not.
ExactMatrix q_exp_nilpotent(const ExactMatrix& t, const QContext& qc);
// sum_m T^m / m!
ExactMatrix exp_nilpotent(const ExactMatrix& t);
// sum_{r>=1} (-1)^{r+1} (U - I)^r / r
ExactMatrix unipotent_log(const ExactMatrix& u);

// Matrix of M^{(x)n} on the symmetric basis e_k^s (all tensor words with k
// factors e_1, each once).
ExactMatrix symmetric_power(const ExactMatrix& m, long n);

// Phi_n(q) = D_n(q) sigma1^s(q), Psi_n(q) = sigma2^s(q) D_n^s(q).
ExactMatrix ferrand_phi(long n, const QContext& qc);
ExactMatrix ferrand_psi(long n, const QContext& qc);
// The same operators read off their action on 1, X, ..., X^n.
ExactMatrix ferrand_phi_action(long n, const QContext& qc);
ExactMatrix ferrand_psi_action(long n, const QContext& qc);

// A B A = B A B
RelationReport verify_braid_like(const ExactMatrix& a, const ExactMatrix& b);

// Parameters of the dimension-d normal forms (d = 2..5). lambda holds
// lambda_1..lambda_d. d = 4 needs D with D^2 = lambda_2 lambda_3 / (lambda_1 lambda_4);
// d = 5 needs gamma with gamma^5 = lambda_1 ... lambda_5.
struct TWParams {
    long d = 0;
    std::vector<Scalar> lambda;
    std::optional<Scalar> D;
    std::optional<Scalar> gamma;
};

// The d = 5 family lambda = (1, q^-1, q^-2, q^-2, 1), gamma = q^-1 at symbolic q.
TWParams tw_default_five();

struct TWMatrices {
    ExactMatrix sigma1;
    std::optional<ExactMatrix> sigma2;  // absent for d = 5
};
TWMatrices tw_matrices(const TWParams& p);

struct TWReport {
    long d = 0;
    bool pass = false;
    Scalar q;
    ExactMatrix conjugator;
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<Mismatch> first;
};
// Builds the matching member of the q-Pascal family and checks the explicit
// equivalence. Throws ConstraintViolated when the parameters are inconsistent.
TWReport tw_equivalence_check(const TWParams& p);

// Letters: 1 = sigma1, 2 = sigma2, -1 and -2 their inverses.
ExactMatrix sl2_projection(const std::vector<int>& word);
std::vector<int> parse_braid_word(const std::string& text);

}  // namespace qbraid
