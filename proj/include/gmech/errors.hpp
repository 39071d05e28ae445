#pragma once

#include <stdexcept>
#include <string>

namespace gmech {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- algebra / geometry --------------------------------------------------

class NotSkewSymmetric : public Error {
public:
    explicit NotSkewSymmetric(const std::string& msg) : Error(msg) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

class NotOrthogonal : public Error {
public:
    explicit NotOrthogonal(const std::string& msg) : Error(msg) {}
};

class OffSphere : public Error {
public:
    explicit OffSphere(const std::string& msg) : Error(msg) {}
};

class AntipodalPoints : public Error {
public:
    explicit AntipodalPoints(const std::string& msg) : Error(msg) {}
};

class RadiusMismatch : public Error {
public:
    explicit RadiusMismatch(const std::string& msg) : Error(msg) {}
};

class NonComposable : public Error {
public:
    explicit NonComposable(const std::string& msg) : Error(msg) {}
};

// -- integration ----------------------------------------------------------

class IntegrationDiverged : public Error {
public:
    explicit IntegrationDiverged(const std::string& msg) : Error(msg) {}
};

class CFLViolation : public Error {
public:
    explicit CFLViolation(const std::string& msg) : Error(msg) {}
};

// -- control --------------------------------------------------------------

class NonPositiveHorizon : public Error {
public:
    explicit NonPositiveHorizon(const std::string& msg) : Error(msg) {}
};

class BracketInvalid : public Error {
public:
    explicit BracketInvalid(const std::string& msg) : Error(msg) {}
};

// -- configuration / io ----------------------------------------------------

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class UnknownKey : public Error {
public:
    explicit UnknownKey(const std::string& msg) : Error(msg) {}
};

class IOError : public Error {
public:
    explicit IOError(const std::string& msg) : Error(msg) {}
};

} // namespace gmech
