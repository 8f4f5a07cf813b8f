#pragma once

// Small independent reference implementations used only by the tests.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "qbraid/matrix.hpp"
#include "qbraid/parse.hpp"

namespace oracle {

using qbraid::ExactMatrix;
using qbraid::FieldContext;
using qbraid::Rational;
using qbraid::Scalar;

// Dense integer polynomial helpers, low degree first.
using IntPoly = std::vector<long>;

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Long division by a monic divisor; returns the quotient and checks the remainder.
inline IntPoly div_exact(IntPoly a, const IntPoly& b, bool* exact) {
    std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t e = a.size(); e-- > db;) {
        long t = a[e];
        q[e - db] = t;
        for (std::size_t i = 0; i <= db; ++i) a[e - db + i] -= t * b[i];
    }
    *exact = true;
    for (long x : a) if (x != 0) *exact = false;
    return q;
}

// Leibniz expansion over all permutations.
inline Scalar permutation_det(const ExactMatrix& a) {
    std::size_t n = a.rows();
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    Scalar total = Scalar::from_int(0, a.ctx());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        Scalar term = Scalar::from_int(inversions % 2 ? -1 : 1, a.ctx());
        for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Rank by fraction-free row reduction with a different pivot rule
// (last nonzero row instead of first).
inline std::size_t rank_oracle(ExactMatrix m) {
    std::size_t rows = m.rows(), cols = m.cols(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = rows; i-- > r;)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar a = m(r, c), b = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = a * m(i, j) - b * m(r, j);
        }
        ++r;
    }
    return r;
}

inline Rational random_rational(std::mt19937& g, long span = 9, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    for (;;) {
        Rational r(num(g), den(g));
        if (!nonzero || !r.is_zero()) return r;
    }
}

inline ExactMatrix random_matrix(std::mt19937& g, std::size_t r, std::size_t c, const FieldContext& ctx = FieldContext()) {
    ExactMatrix m(r, c, ctx);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_rational(random_rational(g), ctx);
    return m;
}

inline Scalar S(const std::string& s, const FieldContext& ctx = FieldContext()) { return qbraid::parse_scalar(s, ctx); }

inline ExactMatrix M(const std::vector<std::vector<std::string>>& rows, const FieldContext& ctx = FieldContext()) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (const auto& x : row) r.back().push_back(S(x, ctx));
    }
    return ExactMatrix::from_rows(r).coerce(qbraid::join(ExactMatrix::from_rows(r).ctx(), ctx));
}

// Rational lambda with lambda_r lambda_{n-r} constant.
inline std::vector<Scalar> random_star_lambda(std::mt19937& g, long n) {
    std::vector<Scalar> lam(static_cast<std::size_t>(n + 1));
    auto rnd = [&] { return Scalar::from_rational(random_rational(g, 9, true), FieldContext()); };
    Scalar c = rnd();
    if (n % 2 == 0) {
        Scalar m = rnd();
        lam[static_cast<std::size_t>(n / 2)] = m;
        c = m * m;
    }
    for (long r = 0; 2 * r < n; ++r) {
        lam[static_cast<std::size_t>(r)] = rnd();
        lam[static_cast<std::size_t>(n - r)] = c / lam[static_cast<std::size_t>(r)];
    }
    return lam;
}

// Span of all words of length <= len in gens, by rank of the flattened stack.
inline std::size_t word_algebra_dim(const std::vector<ExactMatrix>& gens, std::size_t len) {
    std::size_t n = gens[0].rows();
    std::vector<ExactMatrix> words{ExactMatrix::identity(n, gens[0].ctx())}, layer = words;
    for (std::size_t l = 0; l < len; ++l) {
        std::vector<ExactMatrix> next;
        for (const auto& w : layer)
            for (const auto& g : gens) next.push_back(g * w);
        words.insert(words.end(), next.begin(), next.end());
        layer = next;
    }
    ExactMatrix stack(words.size(), n * n, gens[0].ctx());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t k = 0; k < n * n; ++k) stack(i, k) = words[i](k / n, k % n);
    return rank_oracle(stack);
}

// Factored lambda' with lambda'_k lambda'_{n-k} = c, rational entries.
inline std::vector<Scalar> random_factored_lambda(std::mt19937& g, long n, const FieldContext& f) {
    std::vector<Scalar> lp(static_cast<std::size_t>(n + 1));
    auto rnd = [&] { return Scalar::from_rational(random_rational(g, 7, true), f); };
    Scalar c = rnd();
    if (n % 2 == 0) {
        Scalar m = rnd();
        lp[static_cast<std::size_t>(n / 2)] = m;
        c = m * m;
    }
    for (long k = 0; 2 * k < n; ++k) {
        lp[static_cast<std::size_t>(k)] = rnd();
        lp[static_cast<std::size_t>(n - k)] = c / lp[static_cast<std::size_t>(k)];
    }
    return lp;
}

}  // namespace oracle
