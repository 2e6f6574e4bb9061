#ifndef WANAS_ERRORS_HPP
#define WANAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wanas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A polynomial was evaluated without a value for one of its variables.
class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& var)
      : Error("missing value for variable '" + var + "'"), variable(var) {}
  std::string variable;
};

/// poly_reduce was given a relation outside the supported binomial form.
class UnsupportedRelation : public Error {
 public:
  using Error::Error;
};

class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

/// A parameter point satisfied the conditions of more than one theorem case.
class AmbiguousCase : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace wanas

#endif  // WANAS_ERRORS_HPP
