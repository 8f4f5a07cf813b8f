#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbraid/scalar.hpp"

namespace qbraid {

// Sorted, strictly increasing row or column indices.
using IndexSubset = std::vector<std::size_t>;

// Dense matrix over one field, 0-indexed, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, const FieldContext& ctx);
    // Entries are coerced into the join of their fields.
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows, const FieldContext& ctx);
    static ExactMatrix identity(std::size_t n, const FieldContext& ctx);
    static ExactMatrix diagonal(const std::vector<Scalar>& d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }
    const FieldContext& ctx() const { return ctx_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    ExactMatrix coerce(const FieldContext& target) const;
    // Applies f to every entry; f must keep entries in one field.
    template <class F>
    ExactMatrix map(F f) const {
        std::vector<std::vector<Scalar>> rows(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) rows[i].push_back(f((*this)(i, j)));
        if (r_ == 0 || c_ == 0) return *this;
        return from_rows(rows);
    }

    bool is_zero() const;
    bool is_identity() const;
    bool is_upper_triangular() const;
    bool is_lower_triangular() const;
    bool is_unit_upper_triangular() const;
    std::vector<Scalar> diagonal_entries() const;

    ExactMatrix transpose_t() const;
    ExactMatrix transpose_s() const;
    ExactMatrix sharp() const;

    ExactMatrix submatrix(const IndexSubset& rows, const IndexSubset& cols) const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Scalar& s, const ExactMatrix& a);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix pow(unsigned e) const;

private:
    std::size_t r_ = 0, c_ = 0;
    FieldContext ctx_;
    std::vector<Scalar> a_;
};

// First differing entry of two same-shape matrices.
struct Mismatch {
    std::size_t row, col;
    std::string left, right;
};
std::optional<Mismatch> first_mismatch(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scalar_mul(const Scalar& s, const ExactMatrix& a);

// Gauss-Jordan with the first nonzero pivot in each column.
ExactMatrix inverse(const ExactMatrix& a);
Scalar determinant(const ExactMatrix& a);
Scalar minor(const ExactMatrix& a, const IndexSubset& rows, const IndexSubset& cols);
Scalar cofactor(const ExactMatrix& a, const IndexSubset& rows, const IndexSubset& cols);

// Reduced row echelon form; pivot_cols receives the pivot column of each nonzero row.
ExactMatrix rref(const ExactMatrix& a, std::vector<std::size_t>* pivot_cols = nullptr);
std::size_t rank(const ExactMatrix& a);
// Basis of {x : Ax = 0}, each vector scaled so its first nonzero coordinate is 1.
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& a);

std::vector<Scalar> mat_vec(const ExactMatrix& a, const std::vector<Scalar>& v);

// det(C + sum lambda_k E_kk) computed directly and by the expansion over
// principal complements. Both values are returned so callers can compare.
struct CharpolyResult {
    Scalar direct;
    Scalar expansion;
    bool agree;
};
CharpolyResult generalized_charpoly(const ExactMatrix& c, const std::vector<Scalar>& lambda);

// The k-th diagonal of a (k > 0 above the main diagonal), zero elsewhere.
ExactMatrix superdiagonal_component(const ExactMatrix& a, int k);

// Every size-k subset of {0..n-1}, in lexicographic order.
std::vector<IndexSubset> subsets(std::size_t n, std::size_t k);

}  // namespace qbraid
