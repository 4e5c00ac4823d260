#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omlkit {

enum class ErrorKind {
  NotAPartialOrder,
  NoBoundedLattice,
  BadOrthocomplement,
  FlavorError,
  UnknownName,
  SizeCap,
  ExplosionCap,
  NoLeastElement,
  Unsupported,
  NotBoolean,
  NotAnIso,
  Inconsistent,
  FrameCap,
  MalformedInput,
  GlueConflict,
  BlockMismatch,
  RestrictionMismatch,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NoBoundedLattice: return "NoBoundedLattice";
    case ErrorKind::BadOrthocomplement: return "BadOrthocomplement";
    case ErrorKind::FlavorError: return "FlavorError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::ExplosionCap: return "ExplosionCap";
    case ErrorKind::NoLeastElement: return "NoLeastElement";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::NotAnIso: return "NotAnIso";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::FrameCap: return "FrameCap";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::GlueConflict: return "GlueConflict";
    case ErrorKind::BlockMismatch: return "BlockMismatch";
    case ErrorKind::RestrictionMismatch: return "RestrictionMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in omlkit is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace omlkit
