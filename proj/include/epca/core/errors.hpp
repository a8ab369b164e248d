#ifndef EPCA_CORE_ERRORS_HPP
#define EPCA_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epca {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (wrong dimension, non-finite entries, ...).
class InputError : public Error
{
  public:
    using Error::Error;
};

/// Parse failure in an input file. Carries the 1-based line number.
class ParseError : public InputError
{
  public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
      : InputError(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line)
    {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

  private:
    std::string file_;
    std::size_t line_;
};

/**
 * The ambient point handed to a projection has no unique nearest point on the
 * embedded manifold, so the projection (and the extrinsic mean) is undefined.
 */
class FocalPointError : public Error
{
  public:
    using Error::Error;
};

/// A principal curve was requested for an eigenvalue that is not simple.
class MultiplicityError : public Error
{
  public:
    using Error::Error;
};

class IoError : public Error
{
  public:
    using Error::Error;
};

} // namespace epca

#endif
