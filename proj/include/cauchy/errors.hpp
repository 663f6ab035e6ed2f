#pragma once

#include <stdexcept>
#include <string>

namespace cauchy {

// Base of every error the library raises on bad input.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MissingAssignment : public Error {
public:
  using Error::Error;
};

class InvalidSymbol : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace cauchy
