/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_ERRORS_HPP
#define CGPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgpkit {

/// Base class for all cgpkit exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BadParameter : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class NotUnitary : public Error {
public:
  using Error::Error;
};

class NotTracePreserving : public Error {
public:
  using Error::Error;
};

class NotUnital : public Error {
public:
  using Error::Error;
};

class NotBiStochastic : public Error {
public:
  using Error::Error;
};

class NoConvergence : public Error {
public:
  using Error::Error;
};

class SupportViolation : public Error {
public:
  using Error::Error;
};

class DerivativeUnavailable : public Error {
public:
  using Error::Error;
};

/// Malformed input file (JSON syntax, missing keys, wrong shape).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Filesystem failure (unreadable input, unwritable output).
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace cgpkit

#endif // CGPKIT_ERRORS_HPP
