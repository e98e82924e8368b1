#ifndef SYMDG_ERRORS_HPP
#define SYMDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symdg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidCycles : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

/// An operation needed a full element list of a group larger than the bound.
class EnumerationBoundExceeded : public Error {
public:
  using Error::Error;
};

/// Generic resource guard (s-arc counts, vertex counts, ...).
class ResourceBoundExceeded : public Error {
public:
  using Error::Error;
};

class NotTransitive : public Error {
public:
  using Error::Error;
};

class NotSubgroup : public Error {
public:
  using Error::Error;
};

class NotInGroup : public Error {
public:
  using Error::Error;
};

class InvalidDigraph : public Error {
public:
  using Error::Error;
};

class InvalidConnectionSet : public Error {
public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
public:
  NotAnAutomorphism(std::string const &what, std::size_t from, std::size_t to)
  : Error(what), arc_from(from), arc_to(to)
  {}

  std::size_t arc_from;
  std::size_t arc_to;
};

class TransversalError : public Error {
public:
  TransversalError(std::string const &what, std::size_t first, std::size_t second)
  : Error(what), first_vertex(first), second_vertex(second)
  {}

  std::size_t first_vertex;
  std::size_t second_vertex;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace symdg

#endif // SYMDG_ERRORS_HPP
