#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbraid/rep.hpp"

namespace qbraid {

// F_{r,n}(q, lambda) = exp_(q)(T_(q)) - q_{n-r} lambda'_r (D_n Lambda'^sharp)^{-1},
// lambda' being the factored parameters of spec. Cross-checked against
// (sigma1 - q_{n-r} lambda'_r (D^sharp Lambda')^{-1})^s.
ExactMatrix f_matrix(const RepSpec& spec, long r);

struct MinorSearch {
    long r = 0;
    std::optional<IndexSubset> witness;  // rows of the first nonzero minor
    Scalar value;                        // that minor
    std::size_t tried = 0;
    bool exhausted() const { return !witness.has_value(); }
};
// Row subsets of size n-r against columns {r+1..n} of F_{r,n}^s.
MinorSearch minor_criterion(const RepSpec& spec, long r);

struct LinearSpace {
    std::size_t dim = 0;
    std::vector<ExactMatrix> basis;
};
// {A : A X = X A for X in gens}
LinearSpace commutant(const std::vector<ExactMatrix>& gens);
LinearSpace commutant(const Representation& rep);
std::size_t commutant_dimension(const Representation& rep);

// Dimension of the unital algebra generated by gens.
std::size_t burnside_dimension(const std::vector<ExactMatrix>& gens);
std::size_t burnside_dimension(const Representation& rep);

enum class Verdict { OperatorIrreducible, OperatorReducible, SubspaceReducibleWitnessed, Inconclusive };
std::string verdict_name(Verdict v);

struct IrreducibilityReport {
    long n = 0;
    std::vector<MinorSearch> per_r;
    std::size_t commutant_dim = 0;
    std::size_t burnside_dim = 0;
    Verdict verdict = Verdict::Inconclusive;
    bool minors_all_witnessed() const;
};
IrreducibilityReport analyze(const Representation& rep);

struct SuspectedCatalogEntry {
    long n = 0;
    long s = 0;
    int sign = 1;  // alpha_k = zeta_s^(sign k)
    std::vector<Scalar> lambda;
};
std::vector<SuspectedCatalogEntry> suspected_catalog(long n, const Scalar& lambda0 = Scalar());
// The q = 1 representation of a catalog entry.
RepSpec catalog_spec(const SuspectedCatalogEntry& e);

// D_n^(0) = M^{0..n-1}_{1..n}(sigma1(1,n) - lambda_0 Lambda^{-1}), n = lambda.size() - 1.
Scalar d0_determinant(const std::vector<Scalar>& lambda);
// Coefficients a_S of 1 + sum_S a_S prod_{i in S} nu_i, S over nonempty subsets of {1..n-1}.
std::vector<std::pair<IndexSubset, Scalar>> d0_nu_expansion(long n);
// The closed form (n-1)! lambda_0^{n-2} sum_{k<n} lambda_k / prod_{0<k<n} lambda_k
// (the n = 4, lambda_2 = -lambda_0 branch is 0). Requires lambda_r lambda_{n-r}
// constant and lambda_n = lambda_0, else ConstraintViolated.
Scalar d0_starred_closed_form(const std::vector<Scalar>& lambda);
bool d0_starred_check(const std::vector<Scalar>& lambda);

struct EigenForms {
    std::vector<Scalar> e0, f0;
    bool e0_fixed = false, f0_fixed = false;
};
// e0 = ((1-alpha)^{-(n-k)}), f0 = ((1-alpha^{-1})^{n-k}) checked against
// sigma1(1,n) Lambda(alpha) and Lambda^sharp(alpha) sigma2(1,n), Lambda(alpha) = diag(alpha^{n-k}).
EigenForms eigenvector_closed_forms(const Scalar& alpha, long n);

struct FixedVectorReport {
    bool sigma1_fixed = false, sigma2_fixed = false;
    bool pass() const { return sigma1_fixed && sigma2_fixed; }
};
FixedVectorReport fixed_vector_check(const Representation& rep, const std::vector<Scalar>& v);

struct SubspaceWitness {
    long n = 0;
    Scalar q;
    std::vector<std::vector<Scalar>> basis;  // e_1 .. e_{n-1}
    bool invariant = false;
};
// Invariance of {x_0 = x_n = 0} under sigma^D(q, n) (Lambda' = I). Throws
// NotAReduciblePoint when (n)_q != 0.
SubspaceWitness root_of_unity_reducibility(long n, const Scalar& q);
SubspaceWitness root_of_unity_reducibility(long n, long s);

struct N1Verdict {
    bool reducible = false;
    std::size_t burnside_dim = 0;
    bool consistent = false;
};
// n = 1, q = 1: reducible iff alpha^2 - alpha + 1 = 0, alpha = lambda1 / lambda0.
N1Verdict n1_subspace_test(const Scalar& lambda0, const Scalar& lambda1);

struct IntertwinerReport {
    LinearSpace space;
    std::optional<ExactMatrix> invertible;  // first invertible element found
};
// {C : A_i C = C B_i}
IntertwinerReport intertwiner_space(const std::vector<ExactMatrix>& a, const std::vector<ExactMatrix>& b);
IntertwinerReport intertwiner_space(const Representation& a, const Representation& b);

}  // namespace qbraid
