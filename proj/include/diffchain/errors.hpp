#pragma once

#include <stdexcept>
#include <string>

namespace diffchain {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class CapacityError : public Error {
public:
  using Error::Error;
};

class NotUpsetError : public Error {
public:
  using Error::Error;
};

class NotDecreasingError : public Error {
public:
  using Error::Error;
};

class NotAChainForV : public Error {
public:
  using Error::Error;
};

class NotSublatticeError : public Error {
public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace diffchain
