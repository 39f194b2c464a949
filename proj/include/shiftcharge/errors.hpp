#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftcharge {

// Base class for every domain failure the library reports. Input parsing and
// usage problems use the standard exceptions instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyChargeError : Error {
  EmptyChargeError() : Error("operation requires a nonempty charge") {}
};

struct TooFewAtomsError : Error {
  explicit TooFewAtomsError(const std::string& what) : Error(what) {}
};

struct ZeroMomentError : Error {
  explicit ZeroMomentError(std::size_t index)
      : Error("moment at index " + std::to_string(index) + " is zero"), index(index) {}
  std::size_t index;
};

struct NonpositiveRatioError : Error {
  explicit NonpositiveRatioError(std::size_t index)
      : Error("moment ratio at index " + std::to_string(index) + " is not positive"),
        index(index) {}
  std::size_t index;
};

struct UnitWeightError : Error {
  explicit UnitWeightError(std::size_t index)
      : Error("weight square at index " + std::to_string(index) +
              " equals 1; difference transform undefined"),
        index(index) {}
  std::size_t index;
};

struct NonpositiveResultError : Error {
  explicit NonpositiveResultError(std::size_t index)
      : Error("transformed weight square at index " + std::to_string(index) +
              " is not positive"),
        index(index) {}
  std::size_t index;
};

struct AtomAtOneError : Error {
  AtomAtOneError() : Error("input measure has an atom at 1") {}
};

struct WrongShapeError : Error {
  explicit WrongShapeError(const std::string& what) : Error(what) {}
};

struct NotIntegrableError : Error {
  NotIntegrableError()
      : Error("measure fails the 1/(1-x) integrability criterion; "
              "no charge representation exists") {}
};

struct DegenerateNormalizerError : Error {
  DegenerateNormalizerError()
      : Error("certified enclosure of the density series contains zero; "
              "normalization undefined") {}
};

struct InvalidParamsError : Error {
  explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

}  // namespace shiftcharge
