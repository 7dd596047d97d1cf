#pragma once

#include <stdexcept>
#include <string>

namespace fricke {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division left a remainder. In the congruence pipeline this means the
/// expected side factor does not divide the resultant.
class NonExactDivision : public Error {
public:
    explicit NonExactDivision(const std::string& what) : Error("non-exact division: " + what) {}
};

/// A polynomial expected to be a perfect square has an odd multiplicity.
class NotASquare : public Error {
public:
    explicit NotASquare(const std::string& what) : Error("not a square: " + what) {}
};

/// Collected Fricke invariants did not assemble into an F_p polynomial.
class RationalityFailure : public Error {
public:
    explicit RationalityFailure(const std::string& what) : Error("rationality failure: " + what) {}
};

class SingularCurve : public Error {
public:
    SingularCurve() : Error("curve is singular (discriminant zero)") {}
};

/// Level, discriminant, prime or constant outside the supported set.
class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace fricke
