#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ilattice {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Invalid atom declarations or blocks handed to Universe::build, or an
  /// unknown atom id.
  class UniverseError : public Error {
   public:
    using Error::Error;
  };

  /// Two qsets from different universes were combined.
  class UniverseMismatch : public Error {
   public:
    UniverseMismatch() : Error("qsets belong to different universes") {}
  };

  /// An exhaustive enumeration would exceed the configured limit.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  /// A valuation does not cover the atoms of a formula, or names a qset of
  /// another universe.
  class ValuationError : public Error {
   public:
    using Error::Error;
  };

}  // namespace ilattice
