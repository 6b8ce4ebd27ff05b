// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace facecs {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A requested file, directory, subject, or image does not exist.
class NotFoundError : public Error {
  public:
    using Error::Error;
};

/// Malformed file content (bad PGM header, truncated payload, bad model file).
/// The message names the offending file.
class FormatError : public Error {
  public:
    using Error::Error;
};

/// Two operands that must share dimensions do not.
class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

/// A gallery cannot be partitioned as requested.
class SplitError : public Error {
  public:
    using Error::Error;
};

/// A sampling mask was requested with a zero coefficient budget.
class EmptyMaskError : public Error {
  public:
    using Error::Error;
};

/// The retention budget is smaller than the always-kept low-frequency core.
class InsufficientBudgetError : public Error {
  public:
    using Error::Error;
};

/// The reconstruction produced non-finite values.
class SolverDivergedError : public Error {
  public:
    SolverDivergedError(const std::string& what, int iteration)
        : Error(what), iteration_(iteration) {}
    int iteration() const noexcept { return iteration_; }

  private:
    int iteration_;
};

/// Image too small for the requested feature layout.
class TooSmallError : public Error {
  public:
    using Error::Error;
};

/// A binary training set has an empty class.
class EmptyClassError : public Error {
  public:
    using Error::Error;
};

/// Multiclass training needs at least two distinct labels.
class NotEnoughClassesError : public Error {
  public:
    using Error::Error;
};

}  // namespace facecs
