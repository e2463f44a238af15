#ifndef GGB_ERRORS_HPP
#define GGB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggb {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainMismatch : public Error {
public:
    explicit DomainMismatch(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class ArityMismatch : public Error {
public:
    explicit ArityMismatch(const std::string& msg) : Error(msg) {}
};

class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

class ZeroDivisor : public Error {
public:
    explicit ZeroDivisor(const std::string& msg) : Error(msg) {}
};

class ExhaustedDomain : public Error {
public:
    explicit ExhaustedDomain(const std::string& msg) : Error(msg) {}
};

class EmptyGeneratorSet : public Error {
public:
    explicit EmptyGeneratorSet(const std::string& msg) : Error(msg) {}
};

class NotArtinian : public Error {
public:
    explicit NotArtinian(const std::string& msg) : Error(msg) {}
};

// Raised when a supposedly generic input violates a genericity assumption
// (vanishing pivot, short support). Callers resample with a fresh seed.
class Degenerate : public Error {
public:
    explicit Degenerate(const std::string& msg) : Error(msg) {}
};

class DegreeOrder : public Error {
public:
    explicit DegreeOrder(const std::string& msg) : Error(msg) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

// Text-input error carrying the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace ggb

#endif
