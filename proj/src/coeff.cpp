#include "qbraid/coeff.hpp"

namespace qbraid {

std::string format_terms(const std::vector<Term>& terms) {
    std::string out;
    for (const Term& t : terms) {
        if (t.coef.is_zero()) continue;
        bool neg = t.coef.sign() < 0;
        Rational mag = t.coef.abs();
        if (neg)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (t.atom.empty())
            out += mag.str();
        else if (mag.is_one())
            out += t.atom;
        else if (mag.is_integer())
            out += mag.str() + "*" + t.atom;
        else
            out += "(" + mag.str() + ")*" + t.atom;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qbraid
