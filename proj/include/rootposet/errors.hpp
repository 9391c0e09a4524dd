#pragma once

#include <stdexcept>
#include <string>

namespace rootposet {

struct UnsupportedDiagram : std::runtime_error {
    explicit UnsupportedDiagram(const std::string& what) : std::runtime_error(what) {}
};

struct NotARoot : std::runtime_error {
    explicit NotARoot(const std::string& what) : std::runtime_error(what) {}
};

struct IdentityViolation : std::runtime_error {
    explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

struct CoverFailure : std::runtime_error {
    explicit CoverFailure(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessNotFound : std::runtime_error {
    explicit WitnessNotFound(const std::string& what) : std::runtime_error(what) {}
};

struct ConclusionFailure : std::runtime_error {
    explicit ConclusionFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rootposet
