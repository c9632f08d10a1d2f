#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poinc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// An argument violates the precondition of the called operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// The request is well formed but lies outside the implemented domain.
class UnsupportedError : public Error
{
  public:
    using Error::Error;
};

/// Two quadrature fields live on different node sets.
class ResampleError : public Error
{
  public:
    using Error::Error;
};

class ParseError : public Error
{
  public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace poinc
