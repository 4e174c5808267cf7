#pragma once

#include <stdexcept>
#include <string>

namespace famc {

// Base class for everything thrown by this library, so callers can catch
// famc::Error and still see a meaningful what().
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input describes something that is not a group: missing identity, missing
// inverse, or an associativity failure.  The message names a witness.
class NotAGroupError : public Error {
public:
    using Error::Error;
};

// A requested construction exceeded the configured order cap.
class OrderCapError : public Error {
public:
    using Error::Error;
};

// Exact rational arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Family expression could not be parsed; `position` is a byte offset into
// the input where scanning stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Parameter that must be prime is not.
class NotPrimeError : public Error {
public:
    using Error::Error;
};

// Subgroup passed where a normal subgroup is required; message carries a
// conjugation witness.
class NotNormalError : public Error {
public:
    using Error::Error;
};

// Operation requires an abelian group.
class NotAbelianError : public Error {
public:
    using Error::Error;
};

// Conjugacy class count exceeded the cap of an exact-arithmetic routine.
class ClassCapError : public Error {
public:
    using Error::Error;
};

// No usable prime field was found below the search bound.
class NoSuitablePrimeError : public Error {
public:
    using Error::Error;
};

// Randomized spectral sampling failed to separate eigenvalue clusters after
// the allowed number of retries.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

// A proposed factorization G = A.H is not a valid internal semidirect
// decomposition (A not normal/abelian, or A.H does not tile G).
class InvalidDecompositionError : public Error {
public:
    using Error::Error;
};

// Irrep construction hit a stabilizer it cannot handle within its caps.
class UnsupportedStabilizerError : public Error {
public:
    using Error::Error;
};

// Operands live over different groups.
class GroupMismatchError : public Error {
public:
    using Error::Error;
};

// Operator field block shapes do not match the given irrep degrees.
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

// A supposedly complete list of irreps fails the sum-of-squares count.
class IncompleteDualError : public Error {
public:
    using Error::Error;
};

// A numeric routine was asked to exceed its configured size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

}  // namespace famc
