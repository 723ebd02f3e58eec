#ifndef OCTMINOR_ERROR_HPP
#define OCTMINOR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace octminor {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Referenced edge or vertex is absent from the graph.
class NotFoundError : public Error {
public:
  using Error::Error;
};

// Input violates an operation's precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

class UnsupportedSizeError : public Error {
public:
  using Error::Error;
};

// A search ran out of its node budget. Never means "not found".
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

// A postcondition the library guarantees was violated.
class InternalError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace octminor

#endif // OCTMINOR_ERROR_HPP
