#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cl2 {

// Domain errors carry a stable short name so front ends can report a
// machine-readable category next to the human-readable message.
class DomainError : public std::domain_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::domain_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ZeroDivisorError : public DomainError {
public:
    explicit ZeroDivisorError(const std::string& what)
        : DomainError("ZeroDivisor", what) {}
};

class IrrationalCoefficientError : public DomainError {
public:
    explicit IrrationalCoefficientError(const std::string& what)
        : DomainError("IrrationalCoefficient", what) {}
};

class RadicandMismatchError : public DomainError {
public:
    explicit RadicandMismatchError(const std::string& what)
        : DomainError("RadicandMismatch", what) {}
};

class NotSimilarError : public DomainError {
public:
    explicit NotSimilarError(const std::string& what)
        : DomainError("NotSimilar", what) {}
};

class NotPseudosimilarError : public DomainError {
public:
    explicit NotPseudosimilarError(const std::string& what)
        : DomainError("NotPseudosimilar", what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace cl2
