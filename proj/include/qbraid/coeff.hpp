#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qbraid/rational.hpp"

namespace qbraid {

// One printable monomial: rational coefficient times an atom such as
// "zeta6^2" or "q^-1". An empty atom means a bare number.
struct Term {
    Rational coef;
    std::string atom;
};

// Renders terms with explicit signs, e.g. "1-zeta6" or "(1/2)*q^-1".
std::string format_terms(const std::vector<Term>& terms);

// Uniform interface over the base fields used as polynomial coefficients.
template <class K>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    struct Ctx {
        friend bool operator==(const Ctx&, const Ctx&) { return true; }
    };
    static Ctx ctx(const Rational&) { return {}; }
    static Rational zero(const Ctx&) { return Rational(0); }
    static Rational one(const Ctx&) { return Rational(1); }
    static Rational from_rational(const Rational& r, const Ctx&) { return r; }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool is_one(const Rational& a) { return a.is_one(); }
    static Rational inv(const Rational& a) { return a.inv(); }
    static std::vector<Term> terms(const Rational& a) {
        if (a.is_zero()) return {};
        return {Term{a, ""}};
    }
};

}  // namespace qbraid
