// nrtkit - enumeration and classification of normalized right transversals
//
// Exception hierarchy shared by every module. The CLI maps these onto exit
// codes (see cli.hpp).

#ifndef NRT_ERROR_HPP_
#define NRT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nrt {

  //! Base class of all errors thrown by nrtkit.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A configured size bound (closure order, enumeration budget, ...) was
  //! exceeded. Never replaced by silent truncation.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! Input data is structurally invalid (e.g. a semidirect action that is
  //! not an automorphism, a table that is not a group).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called with arguments violating its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! Syntax error in a group expression or selector.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace nrt

#endif  // NRT_ERROR_HPP_
