#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetahedra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input and precondition errors. The CLI maps these to exit code 1.
class ParseError : public Error { using Error::Error; };
class IOError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class CycleError : public Error { using Error::Error; };
class DisconnectedError : public Error { using Error::Error; };
class TooSmallError : public Error { using Error::Error; };
class TooLargeError : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };
class NotATubeError : public Error { using Error::Error; };
class NotATubingError : public Error { using Error::Error; };
class NotAPartitionError : public Error { using Error::Error; };
class NotAFaceError : public Error { using Error::Error; };
class MalformedTreeError : public Error { using Error::Error; };
class DegenerateError : public Error { using Error::Error; };
class NotStrictError : public Error { using Error::Error; };
class IncoherentError : public Error { using Error::Error; };
class WrongFaceError : public Error { using Error::Error; };
class RegimeError : public Error { using Error::Error; };
class NotAdjacentError : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class NotInCollError : public Error { using Error::Error; };
class OverlapError : public Error { using Error::Error; };
class EmptyError : public Error { using Error::Error; };
class NotStronglyConnectedError : public Error { using Error::Error; };
class NotGradedError : public Error { using Error::Error; };
class BitLimitError : public Error { using Error::Error; };

/// Raised by composite expansion; `index` is the offending position.
class NotExpandableError : public Error {
 public:
  NotExpandableError(std::size_t index, const std::string& what)
      : Error(what), index(index) {}
  std::size_t index;
};

/// Raised by composite collapse; `index` is the offending position.
class NotCollapsibleError : public Error {
 public:
  NotCollapsibleError(std::size_t index, const std::string& what)
      : Error(what), index(index) {}
  std::size_t index;
};

// Internal consistency failures. The CLI maps these to exit code 2.
class CertificationError : public Error { using Error::Error; };
class MismatchError : public CertificationError { using CertificationError::CertificationError; };
class EpsilonInfeasibleError : public CertificationError { using CertificationError::CertificationError; };
class OriginNotInteriorError : public CertificationError { using CertificationError::CertificationError; };

}  // namespace posetahedra
