#pragma once

#include <stdexcept>
#include <string>

namespace fakepolisher {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shapes of two operands disagree (image vs geometry, dictionary vs vector).
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An argument is outside its documented domain.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Training data does not carry enough independent directions.
class RankError : public Error {
public:
  using Error::Error;
};

/// A persisted file is malformed, truncated or fails its checksum.
class FormatError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace fakepolisher
