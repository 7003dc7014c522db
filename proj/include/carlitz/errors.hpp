#ifndef CARLITZ_ERRORS_HPP
#define CARLITZ_ERRORS_HPP

/* Error taxonomy for the carlitz library.
 *
 * Everything derives from carlitz::Error so callers can catch the whole
 * family at once.  The CLI maps Error -> exit code 2 (usage errors are 2 as
 * well); verification failures surface as VerificationError -> exit code 1.
 */

#include <stdexcept>
#include <string>

namespace carlitz {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// invalid argument values: bad q, bad variable index, malformed input
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

struct InvalidVariable : InvalidInput {
    explicit InvalidVariable(const std::string& what) : InvalidInput(what) {}
};

struct ParseError : InvalidInput {
    explicit ParseError(const std::string& what) : InvalidInput(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// an approximate computation cannot certify the requested precision
struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& what) : Error(what) {}
};

// a quantity that must land in A[X] (or A[t,z]) failed to do so
struct IntegralityViolation : Error {
    explicit IntegralityViolation(const std::string& what) : Error(what) {}
};

// a series that must terminate kept producing nonzero coefficients
struct NonzeroTail : Error {
    explicit NonzeroTail(const std::string& what) : Error(what) {}
};

// two routes to the same object disagreed
struct MismatchError : Error {
    explicit MismatchError(const std::string& what) : Error(what) {}
};

// an operand that must be F_q-linear in the Carlitz sense is not
struct NonLinearInput : Error {
    explicit NonLinearInput(const std::string& what) : Error(what) {}
};

// an operation's documented precondition does not hold
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// a self-check / acceptance verification failed
struct VerificationError : Error {
    explicit VerificationError(const std::string& what) : Error(what) {}
};

} // namespace carlitz

#endif
