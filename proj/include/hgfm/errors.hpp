#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hgfm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the convergence / termination domain of a series, or a
/// request the selected backend cannot honor (e.g. exact evaluation of a
/// non-terminating series).
struct DomainError : Error {
  using Error::Error;
};

/// A gamma factor or Pochhammer denominator sits at a pole. `position` is
/// the 1-based index j of the offending factor, or 0 when not applicable.
struct PoleError : Error {
  int position;
  explicit PoleError(const std::string& msg, int j = 0) : Error(msg), position(j) {}
};

/// Mismatched spectrum sizes or otherwise malformed input shapes.
struct ShapeError : Error {
  using Error::Error;
};

/// An identity's hypothesis is violated; `condition` names which one.
struct HypothesisError : Error {
  std::string condition;
  HypothesisError(std::string cond, const std::string& msg)
      : Error(msg), condition(std::move(cond)) {}
};

/// A calibration run produced inconsistent probe ratios.
struct CalibrationError : Error {
  using Error::Error;
};

}  // namespace hgfm
