#pragma once

#include <stdexcept>
#include <string>

namespace ontosim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input could not be decoded (malformed JSON / CSV).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A loaded document violated a model invariant. `entity()` names the
/// offending concept, edge or triple so diagnostics can point at it.
class ValidationError : public Error {
public:
    ValidationError(std::string entity, const std::string& what)
        : Error(what), entity_(std::move(entity)) {}

    const std::string& entity() const noexcept { return entity_; }

private:
    std::string entity_;
};

class UnknownConcept : public Error {
public:
    explicit UnknownConcept(const std::string& id)
        : Error("unknown concept '" + id + "'") {}
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class RoleMismatch : public Error {
public:
    using Error::Error;
};

class NoCorrespondence : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NothingApplicable : public Error {
public:
    NothingApplicable() : Error("no applicable partial similarity with positive weight") {}
};

class EmptyDataset : public Error {
public:
    EmptyDataset() : Error("dataset contains no judgments") {}
};

class MissingFeatureState : public Error {
public:
    MissingFeatureState() : Error("hybrid training requires a feature-oriented state") {}
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class InfeasibleStats : public Error {
public:
    using Error::Error;
};

}  // namespace ontosim
