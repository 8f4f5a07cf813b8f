#include "qbraid/matrix.hpp"

#include <utility>

namespace qbraid {

namespace {

void require_square(const ExactMatrix& a, const char* op) {
    if (!a.square())
        throw NonSquare(std::string(op) + " needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()));
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch(std::string(op) + ": shapes differ");
    if (a.ctx() != b.ctx()) throw FieldMismatch(std::string(op) + ": " + a.ctx().name() + " vs " + b.ctx().name());
}

void check_subset(const IndexSubset& s, std::size_t bound) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= bound) throw ShapeMismatch("index " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw ShapeMismatch("index subset not strictly increasing");
    }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldContext& ctx)
    : r_(rows), c_(cols), ctx_(ctx), a_(rows * cols, Scalar::from_int(0, ctx)) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::vector<Scalar> flat;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != cols) throw ShapeMismatch("ragged matrix rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    flat = unify(flat);
    ExactMatrix m;
    m.r_ = rows.size();
    m.c_ = cols;
    if (!flat.empty()) m.ctx_ = flat[0].ctx();
    m.a_ = std::move(flat);
    return m;
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows, const FieldContext& ctx) {
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), ctx);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw ShapeMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = Scalar::from_int(rows[i][j], ctx);
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldContext& ctx) {
    ExactMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::from_int(1, ctx);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Scalar>& d) {
    std::vector<Scalar> u = unify(d);
    FieldContext ctx = u.empty() ? FieldContext() : u[0].ctx();
    ExactMatrix m(u.size(), u.size(), ctx);
    for (std::size_t i = 0; i < u.size(); ++i) m(i, i) = u[i];
    return m;
}

ExactMatrix ExactMatrix::coerce(const FieldContext& target) const {
    if (target == ctx_) return *this;
    ExactMatrix m(r_, c_, target);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].coerce(target);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < i && j < c_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_lower_triangular() const { return transpose_t().is_upper_triangular(); }

bool ExactMatrix::is_unit_upper_triangular() const {
    if (!square() || !is_upper_triangular()) return false;
    for (std::size_t i = 0; i < r_; ++i)
        if (!(*this)(i, i).is_one()) return false;
    return true;
}

std::vector<Scalar> ExactMatrix::diagonal_entries() const {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < r_ && i < c_; ++i) d.push_back((*this)(i, i));
    return d;
}

ExactMatrix ExactMatrix::transpose_t() const {
    ExactMatrix m(c_, r_, ctx_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

// a^s_ij = a_{n-j, n-i}
ExactMatrix ExactMatrix::transpose_s() const {
    require_square(*this, "transpose_s");
    std::size_t n = r_ - 1;
    ExactMatrix m(r_, c_, ctx_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(n - j, n - i);
    return m;
}

// a^#_ij = a_{n-i, n-j}
ExactMatrix ExactMatrix::sharp() const {
    require_square(*this, "sharp");
    std::size_t n = r_ - 1;
    ExactMatrix m(r_, c_, ctx_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(n - i, n - j);
    return m;
}

ExactMatrix ExactMatrix::submatrix(const IndexSubset& rows, const IndexSubset& cols) const {
    check_subset(rows, r_);
    check_subset(cols, c_);
    ExactMatrix m(rows.size(), cols.size(), ctx_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b, "matrix +");
    ExactMatrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b, "matrix -");
    ExactMatrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.c_ != b.r_) throw ShapeMismatch("matrix product: inner dimensions differ");
    if (a.ctx_ != b.ctx_) throw FieldMismatch("matrix product: " + a.ctx_.name() + " vs " + b.ctx_.name());
    ExactMatrix m(a.r_, b.c_, a.ctx_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

ExactMatrix operator*(const Scalar& s, const ExactMatrix& a) {
    if (s.ctx() != a.ctx_) throw FieldMismatch("scalar times matrix: " + s.ctx().name() + " vs " + a.ctx_.name());
    ExactMatrix m = a;
    for (Scalar& x : m.a_) x *= s;
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    if (a.ctx_ != b.ctx_) throw FieldMismatch("matrix ==: " + a.ctx_.name() + " vs " + b.ctx_.name());
    return a.a_ == b.a_;
}

ExactMatrix ExactMatrix::pow(unsigned e) const {
    require_square(*this, "pow");
    ExactMatrix r = identity(r_, ctx_), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

std::optional<Mismatch> first_mismatch(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return Mismatch{a.rows(), a.cols(), "shape", "shape"};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return Mismatch{i, j, a(i, j).str(), b(i, j).str()};
    return std::nullopt;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }
ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) { return a + b; }
ExactMatrix scalar_mul(const Scalar& s, const ExactMatrix& a) { return s * a; }

ExactMatrix inverse(const ExactMatrix& a) {
    require_square(a, "inverse");
    std::size_t n = a.rows();
    ExactMatrix m = a, inv = ExactMatrix::identity(n, a.ctx());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) throw Singular("matrix is singular (column " + std::to_string(col) + ")");
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        Scalar pinv = m(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            if (!m(col, j).is_zero()) m(col, j) *= pinv;
            if (!inv(col, j).is_zero()) inv(col, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
                if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Scalar determinant(const ExactMatrix& a) {
    require_square(a, "determinant");
    std::size_t n = a.rows();
    Scalar det = Scalar::from_int(1, a.ctx());
    if (n == 0) return det;
    ExactMatrix m = a;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return Scalar::from_int(0, a.ctx());
        if (p != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Scalar pinv = m(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Scalar f = m(i, col) * pinv;
            for (std::size_t j = col + 1; j < n; ++j)
                if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

Scalar minor(const ExactMatrix& a, const IndexSubset& rows, const IndexSubset& cols) {
    if (rows.size() != cols.size()) throw ShapeMismatch("minor: row and column subsets differ in size");
    if (rows.empty()) return Scalar::from_int(1, a.ctx());
    return determinant(a.submatrix(rows, cols));
}

Scalar cofactor(const ExactMatrix& a, const IndexSubset& rows, const IndexSubset& cols) {
    if (rows.size() != cols.size()) throw ShapeMismatch("cofactor: row and column subsets differ in size");
    auto complement = [](const IndexSubset& s, std::size_t n) {
        IndexSubset c;
        for (std::size_t i = 0, k = 0; i < n; ++i) {
            if (k < s.size() && s[k] == i)
                ++k;
            else
                c.push_back(i);
        }
        return c;
    };
    std::size_t sum = 0;
    for (std::size_t i : rows) sum += i;
    for (std::size_t j : cols) sum += j;
    Scalar m = minor(a, complement(rows, a.rows()), complement(cols, a.cols()));
    return sum % 2 ? -m : m;
}

ExactMatrix rref(const ExactMatrix& a, std::vector<std::size_t>* pivot_cols) {
    ExactMatrix m = a;
    std::size_t rows = m.rows(), cols = m.cols(), r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        // Sparsest-looking pivot keeps rational-function entries small.
        std::size_t p = rows, best = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            std::size_t cost = m(i, col).str().size();
            if (p == rows || cost < best) {
                p = i;
                best = cost;
                if (cost <= 2) break;
            }
        }
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar pinv = m(r, col).inv();
        for (std::size_t j = col; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= pinv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (std::size_t j = col; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++r;
    }
    return m;
}

std::size_t rank(const ExactMatrix& a) {
    std::vector<std::size_t> piv;
    rref(a, &piv);
    return piv.size();
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& a) {
    std::vector<std::size_t> piv;
    ExactMatrix r = rref(a, &piv);
    std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar::from_int(0, a.ctx()));
        v[f] = Scalar::from_int(1, a.ctx());
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        for (const Scalar& x : v)
            if (!x.is_zero()) {
                Scalar s = x.inv();
                for (Scalar& y : v) y *= s;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> mat_vec(const ExactMatrix& a, const std::vector<Scalar>& v) {
    if (v.size() != a.cols()) throw ShapeMismatch("matrix-vector: size mismatch");
    std::vector<Scalar> out(a.rows(), Scalar::from_int(0, a.ctx()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
}

CharpolyResult generalized_charpoly(const ExactMatrix& c, const std::vector<Scalar>& lambda) {
    require_square(c, "generalized_charpoly");
    std::size_t m = c.rows();
    if (lambda.size() != m) throw ShapeMismatch("generalized_charpoly: need one lambda per row");
    std::vector<Scalar> lam = unify(lambda, c.ctx());
    ExactMatrix cc = c.coerce(lam.empty() ? c.ctx() : lam[0].ctx());
    ExactMatrix shifted = cc;
    for (std::size_t k = 0; k < m; ++k) shifted(k, k) += lam[k];
    Scalar direct = determinant(shifted);

    // Sum over subsets alpha of prod_{k in alpha} lambda_k times the principal
    // minor of C on the complement of alpha.
    Scalar expansion = Scalar::from_int(0, cc.ctx());
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        Scalar w = Scalar::from_int(1, cc.ctx());
        IndexSubset rest;
        for (std::size_t k = 0; k < m; ++k) {
            if (mask & (1ul << k))
                w *= lam[k];
            else
                rest.push_back(k);
        }
        if (w.is_zero()) continue;
        expansion += w * minor(cc, rest, rest);
    }
    bool agree = direct == expansion;
    return {direct, expansion, agree};
}

ExactMatrix superdiagonal_component(const ExactMatrix& a, int k) {
    require_square(a, "superdiagonal_component");
    ExactMatrix m(a.rows(), a.cols(), a.ctx());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        long j = static_cast<long>(i) + k;
        if (j >= 0 && j < static_cast<long>(a.cols())) m(i, static_cast<std::size_t>(j)) = a(i, static_cast<std::size_t>(j));
    }
    return m;
}

std::vector<IndexSubset> subsets(std::size_t n, std::size_t k) {
    std::vector<IndexSubset> out;
    if (k > n) return out;
    IndexSubset s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    for (;;) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

}  // namespace qbraid
