#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbraid {

// Every library failure derives from Error so the CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QBRAID_ERROR(Name)                                  \
    class Name : public Error {                             \
    public:                                                 \
        explicit Name(const std::string& what) : Error(what) {} \
    }

QBRAID_ERROR(DivisionByZero);
QBRAID_ERROR(FieldMismatch);
QBRAID_ERROR(PoleAtPoint);
QBRAID_ERROR(ZeroSubstitution);
QBRAID_ERROR(ZeroQ);
QBRAID_ERROR(NonSquare);
QBRAID_ERROR(ShapeMismatch);
QBRAID_ERROR(Singular);
QBRAID_ERROR(NonPolynomialQuotient);
QBRAID_ERROR(NotUnitUpperTriangular);
QBRAID_ERROR(QFactorialZero);
QBRAID_ERROR(UnsupportedDimension);
QBRAID_ERROR(ConstraintViolated);
QBRAID_ERROR(SingularDiagonal);
QBRAID_ERROR(AlphaDegenerate);
QBRAID_ERROR(NotAReduciblePoint);
QBRAID_ERROR(DegreeLimitExceeded);

#undef QBRAID_ERROR

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class CondQViolated : public Error {
public:
    CondQViolated(const std::string& what, int r) : Error(what), r_(r) {}
    int index() const { return r_; }

private:
    int r_;
};

}  // namespace qbraid
