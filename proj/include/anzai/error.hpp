#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anzai {

/// Failure categories surfaced by the library. The CLI maps them to exit codes.
enum class ErrorTag {
  kInvalidArgument,
  kVariantMismatch,
  kFrequencyCap,
  kInexact,
  kNotRepresentable,
  kGridTooSmall,
  kNotUnimodular,
  kNotPositive,
  kRootOnCircle,
  kRootCount,
  kNotPositiveSemidefinite,
  kInput,
};

std::string_view to_string(ErrorTag tag);

class Error : public std::runtime_error {
 public:
  Error(ErrorTag tag, const std::string& what)
      : std::runtime_error(std::string(to_string(tag)) + ": " + what), tag_(tag) {}

  ErrorTag tag() const noexcept { return tag_; }

 private:
  ErrorTag tag_;
};

inline std::string_view to_string(ErrorTag tag) {
  switch (tag) {
    case ErrorTag::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorTag::kVariantMismatch: return "VARIANT_MISMATCH";
    case ErrorTag::kFrequencyCap: return "FREQUENCY_CAP";
    case ErrorTag::kInexact: return "INEXACT";
    case ErrorTag::kNotRepresentable: return "NOT_REPRESENTABLE";
    case ErrorTag::kGridTooSmall: return "GRID_TOO_SMALL";
    case ErrorTag::kNotUnimodular: return "NOT_UNIMODULAR";
    case ErrorTag::kNotPositive: return "NOT_POSITIVE";
    case ErrorTag::kRootOnCircle: return "ROOT_ON_CIRCLE";
    case ErrorTag::kRootCount: return "ROOT_COUNT";
    case ErrorTag::kNotPositiveSemidefinite: return "NOT_PSD";
    case ErrorTag::kInput: return "INPUT";
  }
  return "UNKNOWN";
}

}  // namespace anzai
