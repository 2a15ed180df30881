#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spikenet {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SPIKENET_DEFINE_ERROR(Name)                                       \
  struct Name : Error {                                                   \
    explicit Name(const std::string& msg) : Error(std::string(#Name ": ") + msg) {} \
  }

// event file codec / preprocessing
SPIKENET_DEFINE_ERROR(BadMagic);
SPIKENET_DEFINE_ERROR(TruncatedRecord);
SPIKENET_DEFINE_ERROR(IoFailure);
SPIKENET_DEFINE_ERROR(InvalidTarget);
SPIKENET_DEFINE_ERROR(WindowTooLong);
SPIKENET_DEFINE_ERROR(IndexOutOfRange);

// emulator
SPIKENET_DEFINE_ERROR(GeometryMismatch);
SPIKENET_DEFINE_ERROR(DotOutOfBounds);

// network
SPIKENET_DEFINE_ERROR(ShapeMismatch);
SPIKENET_DEFINE_ERROR(NonFiniteInput);
SPIKENET_DEFINE_ERROR(StateNotInitialized);
SPIKENET_DEFINE_ERROR(InconsistentSpec);

// training
SPIKENET_DEFINE_ERROR(NonPositivePrediction);
SPIKENET_DEFINE_ERROR(NonFiniteGradient);
SPIKENET_DEFINE_ERROR(EmptyDataset);
SPIKENET_DEFINE_ERROR(DivergedTraining);
SPIKENET_DEFINE_ERROR(UnsortedTimes);

// evaluation
SPIKENET_DEFINE_ERROR(DegenerateSeries);
SPIKENET_DEFINE_ERROR(NegativeRate);

// energy
SPIKENET_DEFINE_ERROR(NonPositiveInput);
SPIKENET_DEFINE_ERROR(WrongKind);
SPIKENET_DEFINE_ERROR(InconsistentComponents);

// config / cli
SPIKENET_DEFINE_ERROR(ParseError);
SPIKENET_DEFINE_ERROR(UnknownKey);
SPIKENET_DEFINE_ERROR(RangeError);
SPIKENET_DEFINE_ERROR(UnknownCommand);
SPIKENET_DEFINE_ERROR(ConfigError);

#undef SPIKENET_DEFINE_ERROR

// Record-indexed decode failures keep the offending index available to callers.
struct OutOfBoundsEvent : Error {
  std::size_t index;
  OutOfBoundsEvent(std::size_t i, const std::string& msg)
      : Error("OutOfBoundsEvent at record " + std::to_string(i) + ": " + msg), index(i) {}
};

struct NonMonotoneTimestamp : Error {
  std::size_t index;
  explicit NonMonotoneTimestamp(std::size_t i)
      : Error("NonMonotoneTimestamp at record " + std::to_string(i)), index(i) {}
};

}  // namespace spikenet
