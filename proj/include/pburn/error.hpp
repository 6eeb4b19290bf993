#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pburn {

enum class ErrorKind {
  CollinearTriangle,
  DegenerateInput,
  DegenerateChord,
  InvalidPolygon,
  InvalidDomain,
  PointOutsideDomain,
  EmptySites,
  InvalidInstance,
  TooLarge,
  NotAPath,
  NotSliceable,
  GenerationFailed,
  InvalidDrawing,
  EpsilonTooLarge,
  UnionDegenerate,
  ParseError,
  ValidationError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CollinearTriangle: return "CollinearTriangle";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DegenerateChord: return "DegenerateChord";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorKind::EmptySites: return "EmptySites";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotSliceable: return "NotSliceable";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::InvalidDrawing: return "InvalidDrawing";
    case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorKind::UnionDegenerate: return "UnionDegenerate";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (and the CLI's
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pburn
